#include "zdinf/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>
#include <random>

#include "CLI11.hpp"
#include "json.hpp"

#include "zdinf/ar.hpp"
#include "zdinf/singularity.hpp"
#include "zdinf/sweep.hpp"

namespace zdinf {

using Json = nlohmann::ordered_json;

namespace {

class DslParser {
public:
    explicit DslParser(std::string_view text) : s_(text) {}

    std::vector<IndecLabel> parse() {
        std::vector<IndecLabel> out;
        out.push_back(atom());
        skip();
        while (pos_ < s_.size() && s_[pos_] == '+') {
            ++pos_;
            out.push_back(atom());
            skip();
        }
        if (pos_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip();
        if (pos_ >= s_.size() || s_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    int integer() {
        skip();
        const char* begin = s_.data() + pos_;
        int value = 0;
        const auto [ptr, ec] = std::from_chars(begin, s_.data() + s_.size(), value);
        if (ec != std::errc()) throw ParseError("expected an integer", pos_);
        pos_ += static_cast<std::size_t>(ptr - begin);
        return value;
    }

    IndecLabel atom() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("expected an atom", pos_);
        const char head = s_[pos_++];
        if (head == 'T') {
            expect('[');
            const int n = integer();
            expect(',');
            const int a = integer();
            expect(']');
            return IndecLabel::wing(n, a);
        }
        if (head != 'F') throw ParseError("expected 'F' or 'T'", pos_ - 1);
        if (pos_ < s_.size() && (s_[pos_] == '0' || s_[pos_] == '1')) {
            const int type = s_[pos_++] - '0';
            expect('[');
            const int a = integer();
            expect(']');
            return IndecLabel::rank_one(type, a);
        }
        expect('[');
        const int m = integer();
        expect(',');
        const int a = integer();
        expect(']');
        return IndecLabel::rank_two(m, a);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

Scalar scalar_from_json(FieldSpec field, const Json& v) {
    if (v.is_number_integer()) return Scalar(field, v.get<long long>());
    if (v.is_string()) return Scalar::parse(field, v.get<std::string>());
    throw ParseError("direction entries must be integers or rational strings", 0);
}

CObject literal_from_json(std::string_view text, FieldSpec session) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError("invalid JSON literal", e.byte > 0 ? e.byte - 1 : 0);
    }
    try {
        FieldSpec field = session;
        if (doc.contains("field")) {
            field = FieldSpec::parse(doc.at("field").get<std::string>());
            if (!(field == session)) throw FieldMismatch("literal over " + field.to_string() + " in a session over " + session.to_string());
        }
        std::vector<TorsionSummand> tors;
        if (doc.contains("torsion"))
            for (const auto& t : doc.at("torsion")) tors.push_back({t.at(0).get<int>(), t.at(1).get<int>()});
        GradedLattice lattice = GradedLattice::zero(field);
        if (doc.contains("lattice")) {
            const auto& l = doc.at("lattice");
            std::vector<LatticeGenerator> gens;
            for (const auto& g : l.at("gens")) {
                Vec dir;
                for (const auto& c : g.at("dir")) dir.push_back(scalar_from_json(field, c));
                gens.push_back({g.at("jump").get<int>(), std::move(dir)});
            }
            lattice = canonicalize(field, gens, l.at("p").get<int>(), l.at("q").get<int>());
        }
        return CObject(field, TorsionPart(std::move(tors)), std::move(lattice));
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed object literal: ") + e.what(), 0);
    }
}

}  // namespace

ObjectExpr parse_expr(std::string_view text, FieldSpec field) {
    std::size_t lead = 0;
    while (lead < text.size() && std::isspace(static_cast<unsigned char>(text[lead]))) ++lead;
    if (lead < text.size() && text[lead] == '{') return {{}, literal_from_json(text, field)};
    return {DslParser(text).parse(), std::nullopt};
}

std::string print_expr(const ObjectExpr& e) { return e.literal ? e.literal->to_string() : to_string(e.atoms); }

CObject to_object(FieldSpec field, const ObjectExpr& e) { return e.literal ? *e.literal : synthesize(field, e.atoms); }

CObject parse_object(std::string_view text, FieldSpec field) { return to_object(field, parse_expr(text, field)); }

std::string object_json(const CObject& x) {
    Json doc;
    doc["field"] = x.field.to_string();
    doc["torsion"] = Json::array();
    for (const auto& t : x.torsion.summands()) doc["torsion"].push_back({t.n, t.a});
    Json gens = Json::array();
    for (const auto& g : x.lattice.generators()) {
        Json dir = Json::array();
        for (const auto& c : g.dir) dir.push_back(c.to_string());
        gens.push_back({{"jump", g.jump}, {"dir", dir}});
    }
    doc["lattice"] = {{"p", x.p()}, {"q", x.q()}, {"gens", gens}};
    return doc.dump();
}

namespace {

struct Session {
    FieldSpec field;
    bool json = false;
    std::ostream& out;
    std::ostream& err;

    ObjectExpr expr(const std::string& text) const { return parse_expr(text, field); }

    void emit(Json doc, const std::string& text) const {
        if (json) {
            out << doc.dump(2) << "\n";
        } else {
            out << text;
        }
    }
};

Json header(const Session& s, const std::string& command) {
    Json doc;
    doc["schema"] = "zdinf." + command + "/1";
    doc["field"] = s.field.to_string();
    return doc;
}

int cmd_hom(const Session& s, const std::string& a, const std::string& b) {
    const auto ea = s.expr(a), eb = s.expr(b);
    const std::size_t dim = hom_space(to_object(s.field, ea), to_object(s.field, eb)).dim();
    Json doc = header(s, "hom");
    doc["a"] = print_expr(ea);
    doc["b"] = print_expr(eb);
    doc["dim"] = dim;
    s.emit(doc, "dim Hom(" + print_expr(ea) + ", " + print_expr(eb) + ") = " + std::to_string(dim) + "\n");
    return kExitOk;
}

int cmd_ext(const Session& s, const std::string& a, const std::string& b) {
    const auto ea = s.expr(a), eb = s.expr(b);
    const CObject x = to_object(s.field, ea), y = to_object(s.field, eb);
    const std::size_t dim = ext_space(x, y).dim();
    const int check = ext_dim_via_injectives(x, y);
    Json doc = header(s, "ext");
    doc["a"] = print_expr(ea);
    doc["b"] = print_expr(eb);
    doc["dim"] = dim;
    doc["dim_via_injectives"] = check;
    s.emit(doc, "dim Ext^1(" + print_expr(ea) + ", " + print_expr(eb) + ") = " + std::to_string(dim) + "\n");
    return static_cast<int>(dim) == check ? kExitOk : kExitCheckFailed;
}

int cmd_euler(const Session& s, const std::string& a, const std::string& b) {
    const auto ea = s.expr(a), eb = s.expr(b);
    const CObject x = to_object(s.field, ea), y = to_object(s.field, eb);
    const auto h = static_cast<long long>(hom_space(x, y).dim());
    const auto e = static_cast<long long>(ext_space(x, y).dim());
    Json doc = header(s, "euler");
    doc["a"] = print_expr(ea);
    doc["b"] = print_expr(eb);
    doc["hom"] = h;
    doc["ext"] = e;
    doc["chi"] = h - e;
    s.emit(doc, "chi(" + print_expr(ea) + ", " + print_expr(eb) + ") = " + std::to_string(h) + " - " + std::to_string(e) + " = " +
                    std::to_string(h - e) + "\n");
    return kExitOk;
}

int cmd_serre(const Session& s, const std::string& spec_text, bool serial) {
    const CatalogSpec spec = parse_catalog_spec(spec_text);
    const auto labels = catalog(spec);
    const SerreSweep sweep = serre_sweep(s.field, labels, serial ? Schedule::Serial : Schedule::Parallel);
    Json doc = header(s, "serre");
    doc["catalog"] = {{"m_max", spec.m_max}, {"n_max", spec.n_max}, {"a_min", spec.a_min}, {"a_max", spec.a_max}};
    doc["objects"] = labels.size();
    doc["pairs"] = sweep.pairs.size();
    doc["failures"] = sweep.failures;
    doc["pass"] = sweep.pass();
    std::string text = "catalog " + spec_text + ": " + std::to_string(labels.size()) + " objects, " + std::to_string(sweep.pairs.size()) +
                       " ordered pairs\n";
    Json failed = Json::array();
    for (const auto& p : sweep.pairs) {
        if (p.report.pass) continue;
        failed.push_back({{"x", p.x.to_string()},
                          {"y", p.y.to_string()},
                          {"hom", p.report.hom_dim},
                          {"ext", p.report.ext_dim},
                          {"gram_rank", p.report.gram_rank},
                          {"flipped_gram_rank", p.report.flipped_gram_rank}});
        text += "FAIL " + p.x.to_string() + " , " + p.y.to_string() + ": hom " + std::to_string(p.report.hom_dim) + ", ext " +
                std::to_string(p.report.ext_dim) + ", gram rank " + std::to_string(p.report.gram_rank) + "\n";
    }
    doc["failed_pairs"] = failed;
    text += "failures: " + std::to_string(sweep.failures) + "\n" + (sweep.pass() ? "PASS\n" : "FAIL\n");
    s.emit(doc, text);
    return sweep.pass() ? kExitOk : kExitCheckFailed;
}

int cmd_translate(const Session& s, const std::string& a) {
    const auto ea = s.expr(a);
    const auto factors = decompose(serre_twist(to_object(s.field, ea))).factors;
    Json doc = header(s, "translate");
    doc["input"] = print_expr(ea);
    doc["output"] = to_string(factors);
    s.emit(doc, "V(" + print_expr(ea) + ") = " + to_string(factors) + "\n");
    return kExitOk;
}

int cmd_decompose(const Session& s, const std::string& a, std::uint64_t seed) {
    const auto ea = s.expr(a);
    const auto d = decompose(to_object(s.field, ea), seed);
    Json doc = header(s, "decompose");
    doc["input"] = print_expr(ea);
    doc["factors"] = Json::array();
    for (const auto& f : d.factors) doc["factors"].push_back(f.to_string());
    s.emit(doc, print_expr(ea) + " = " + to_string(d.factors) + "\n");
    return kExitOk;
}

int cmd_filtration(const Session& s, const std::string& a) {
    const auto ea = s.expr(a);
    const auto steps = filtration(to_object(s.field, ea));
    Json doc = header(s, "filtration");
    doc["input"] = print_expr(ea);
    doc["steps"] = Json::array();
    std::string text;
    for (std::size_t k = 0; k < steps.size(); ++k) {
        doc["steps"].push_back({{"k", k + 1}, {"quotient", steps[k].quotient.to_string()}});
        text += "F_" + std::to_string(k + 1) + " / F_" + std::to_string(k) + " = " + steps[k].quotient.to_string() + "\n";
    }
    s.emit(doc, text);
    return kExitOk;
}

int cmd_ars(const Session& s, const std::string& a) {
    const auto ea = s.expr(a);
    const auto factors = decompose(to_object(s.field, ea)).factors;
    if (factors.size() != 1) throw NotIndecomposable(print_expr(ea) + " decomposes as " + to_string(factors));
    const AlmostSplit ar = almost_split(s.field, factors.front());
    Json doc = header(s, "ars");
    doc["left"] = ar.left.to_string();
    doc["middle"] = Json::array();
    for (const auto& m : ar.middle) doc["middle"].push_back(m.to_string());
    doc["right"] = ar.right.to_string();
    doc["sequence"] = format_sequence(ar);
    s.emit(doc, format_sequence(ar) + "\n");
    return kExitOk;
}

int cmd_quiver(const Session& s, int m_max, int a_min, int a_max, int n_max, const std::string& format, bool serial) {
    const QuiverWindow w = quiver_window(s.field, m_max, a_min, a_max, n_max, !serial);
    s.out << (format == "json" ? quiver_json(w) : dot_export(w));
    return kExitOk;
}

int cmd_index(const Session& s, const std::string& a) {
    const auto ea = s.expr(a);
    const int index = singularity_index(to_object(s.field, ea));
    Json doc = header(s, "index");
    doc["input"] = print_expr(ea);
    doc["index"] = index;
    s.emit(doc, "singularity index of " + print_expr(ea) + " = " + std::to_string(index) + "\n");
    return kExitOk;
}

IndecLabel random_label(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, 3), size(1, 3), shift(-2, 2);
    switch (kind(rng)) {
        case 0: return IndecLabel::rank_one(0, shift(rng));
        case 1: return IndecLabel::rank_one(1, shift(rng));
        case 2: return IndecLabel::rank_two(size(rng), shift(rng));
        default: return IndecLabel::wing(size(rng), shift(rng));
    }
}

int cmd_selftest(const Session& s, std::uint64_t seed) {
    std::vector<std::pair<std::string, bool>> checks;
    const FieldSpec k = s.field;

    bool ok = true;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int a = -2; a <= 2; ++a)
                for (int b = -2; b <= 2; ++b) {
                    const CObject x = synthesize(k, IndecLabel::rank_one(i, a)), y = synthesize(k, IndecLabel::rank_one(j, b));
                    ok = ok && hom_space(x, y).dim() == (i == j && a <= b ? 1u : 0u);
                    ok = ok && ext_space(x, y).dim() == (i == 1 - j && a > b ? 1u : 0u);
                }
    checks.emplace_back("rank-one hom/ext table", ok);

    const auto small = catalog(CatalogSpec{2, 2, -1, 1});
    checks.emplace_back("serre duality on a small catalog", serre_sweep(k, small, Schedule::Parallel).pass());

    ok = true;
    for (const auto& l : small) {
        const AlmostSplit ar = almost_split(k, l);
        ok = ok && ar.left == serre_twist(l) && is_exact(ar.seq);
    }
    checks.emplace_back("almost split sequences", ok);

    std::mt19937_64 rng(seed);
    ok = true;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<IndecLabel> labels(std::uniform_int_distribution<std::size_t>(1, 4)(rng));
        for (auto& l : labels) l = random_label(rng);
        std::sort(labels.begin(), labels.end());
        ok = ok && decompose(random_relabel(synthesize(k, labels), rng), rng()).factors == labels;
    }
    checks.emplace_back("krull-schmidt on random sums", ok);

    ok = true;
    for (int m = 1; m <= 3; ++m) ok = ok && singularity_index(synthesize(k, IndecLabel::rank_two(m, 0))) == m;
    checks.emplace_back("singularity index", ok);

    bool all = true;
    Json doc = header(s, "selftest");
    doc["seed"] = seed;
    doc["checks"] = Json::array();
    std::string text;
    for (const auto& [name, pass] : checks) {
        all = all && pass;
        doc["checks"].push_back({{"name", name}, {"pass", pass}});
        text += std::string(pass ? "pass  " : "FAIL  ") + name + "\n";
    }
    doc["pass"] = all;
    s.emit(doc, text);
    return all ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations in the category of graded lattices and x-torsion modules", "zdinf"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string field_text = "Q", format = "text";
    app.add_option("--field", field_text, "Coefficient field: Q or Fp:<p>");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::string a, b, spec_text = "m<=4,n<=4,|a|<=3", quiver_format = "dot";
    std::uint64_t seed = kDefaultDecompositionSeed;
    int m_max = 4, a_min = -1, a_max = 3, n_max = 4;
    bool serial = false;

    auto two = [&](const std::string& name, const std::string& help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("A", a, "Object")->required();
        sub->add_option("B", b, "Object")->required();
        return sub;
    };
    auto one = [&](const std::string& name, const std::string& help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("A", a, "Object")->required();
        return sub;
    };
    auto* hom = two("hom", "dim Hom(A, B)");
    auto* ext = two("ext", "dim Ext^1(A, B)");
    auto* euler = two("euler", "dim Hom(A, B) - dim Ext^1(A, B)");
    auto* serre = app.add_subcommand("serre", "Serre duality over a catalog of indecomposables");
    serre->add_option("--catalog", spec_text, "Constraints such as m<=3,n<=3,|a|<=2");
    serre->add_flag("--serial", serial, "Use the serial reference kernel");
    auto* translate = one("translate", "Auslander-Reiten translate V A");
    auto* decomp = one("decompose", "Krull-Schmidt decomposition of A");
    decomp->add_option("--seed", seed, "Seed for the isomorphism search");
    auto* filt = one("filtration", "Rank-one filtration quotients of a lattice object");
    auto* ars = one("ars", "Almost split sequence ending in an indecomposable A");
    auto* quiver = app.add_subcommand("quiver", "Window of the Auslander-Reiten quiver");
    quiver->add_option("--m-max", m_max, "Largest m of F[m,a]");
    quiver->add_option("--a-min", a_min, "Smallest a");
    quiver->add_option("--a-max", a_max, "Largest a");
    quiver->add_option("--n-max", n_max, "Largest n of T[n,a]");
    quiver->add_option("--format", quiver_format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    quiver->add_flag("--serial", serial, "Use the serial reference kernel");
    auto* index = one("index", "Singularity index of a lattice object");
    auto* selftest = app.add_subcommand("selftest", "Quick self checks");
    selftest->add_option("--seed", seed, "Seed for the random trials");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        const Session s{FieldSpec::parse(field_text), format == "json", out, err};
        if (hom->parsed()) return cmd_hom(s, a, b);
        if (ext->parsed()) return cmd_ext(s, a, b);
        if (euler->parsed()) return cmd_euler(s, a, b);
        if (serre->parsed()) return cmd_serre(s, spec_text, serial);
        if (translate->parsed()) return cmd_translate(s, a);
        if (decomp->parsed()) return cmd_decompose(s, a, seed);
        if (filt->parsed()) return cmd_filtration(s, a);
        if (ars->parsed()) return cmd_ars(s, a);
        if (quiver->parsed()) return cmd_quiver(s, m_max, a_min, a_max, n_max, quiver_format, serial);
        if (index->parsed()) return cmd_index(s, a);
        if (selftest->parsed()) return cmd_selftest(s, seed);
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const RangeError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotPrime& e) {
        err << "usage error: --field: " << e.what() << "\n";
        return kExitUsage;
    } catch (const FieldMismatch& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    err << "usage error: no command\n";
    return kExitUsage;
}

}  // namespace zdinf
