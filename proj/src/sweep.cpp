#include "zdinf/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>

namespace zdinf {

namespace {

std::string_view trim(std::string_view s, std::size_t& offset) {
    while (!s.empty() && s.front() == ' ') {
        s.remove_prefix(1);
        ++offset;
    }
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

int parse_bound(std::string_view s, std::size_t offset) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("expected an integer bound", offset);
    return value;
}

// Runs body(k) for k in [0, count); the serial path is the reference.
void for_each_index(std::size_t count, Schedule schedule, const std::function<void(std::size_t)>& body) {
    if (schedule == Schedule::Serial) {
        for (std::size_t k = 0; k < count; ++k) body(k);
        return;
    }
    const auto n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < n; ++k) body(static_cast<std::size_t>(k));
}

std::vector<CObject> objects_of(FieldSpec field, const std::vector<IndecLabel>& labels) {
    std::vector<CObject> out;
    out.reserve(labels.size());
    for (const auto& l : labels) out.push_back(synthesize(field, l));
    return out;
}

template <typename F>
std::vector<std::vector<std::size_t>> pair_table(FieldSpec field, const std::vector<IndecLabel>& labels, Schedule schedule, F dim) {
    const auto objs = objects_of(field, labels);
    const std::size_t n = objs.size();
    std::vector<std::vector<std::size_t>> out(n, std::vector<std::size_t>(n, 0));
    for_each_index(n * n, schedule, [&](std::size_t k) { out[k / n][k % n] = dim(objs[k / n], objs[k % n]); });
    return out;
}

}  // namespace

CatalogSpec parse_catalog_spec(std::string_view text) {
    CatalogSpec spec{0, 0, 0, 0};
    bool have_a_min = false, have_a_max = false;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        std::size_t offset = pos;
        const std::string_view item = trim(text.substr(pos, comma - pos), offset);
        auto rest = [&](std::size_t k) { return item.substr(k); };
        if (item.starts_with("m<=")) {
            spec.m_max = parse_bound(rest(3), offset + 3);
        } else if (item.starts_with("n<=")) {
            spec.n_max = parse_bound(rest(3), offset + 3);
        } else if (item.starts_with("|a|<=")) {
            const int b = parse_bound(rest(5), offset + 5);
            spec.a_min = -b;
            spec.a_max = b;
            have_a_min = have_a_max = true;
        } else if (item.starts_with("a>=")) {
            spec.a_min = parse_bound(rest(3), offset + 3);
            have_a_min = true;
        } else if (item.starts_with("a<=")) {
            spec.a_max = parse_bound(rest(3), offset + 3);
            have_a_max = true;
        } else {
            throw ParseError("unknown catalog constraint '" + std::string(item) + "'", offset);
        }
        pos = comma + 1;
    }
    if (!have_a_min || !have_a_max) throw ParseError("catalog needs bounds on a", text.size());
    if (spec.a_min > spec.a_max) throw RangeError("empty range of a");
    return spec;
}

std::vector<IndecLabel> catalog(const CatalogSpec& spec) {
    std::vector<IndecLabel> out;
    for (int a = spec.a_min; a <= spec.a_max; ++a) {
        out.push_back(IndecLabel::rank_one(0, a));
        out.push_back(IndecLabel::rank_one(1, a));
        for (int m = 1; m <= spec.m_max; ++m) out.push_back(IndecLabel::rank_two(m, a));
        for (int n = 1; n <= spec.n_max; ++n) out.push_back(IndecLabel::wing(n, a));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::size_t>> hom_dim_table(FieldSpec field, const std::vector<IndecLabel>& labels, Schedule schedule) {
    return pair_table(field, labels, schedule, [](const CObject& x, const CObject& y) { return hom_space(x, y).dim(); });
}

std::vector<std::vector<std::size_t>> ext_dim_table(FieldSpec field, const std::vector<IndecLabel>& labels, Schedule schedule) {
    return pair_table(field, labels, schedule, [](const CObject& x, const CObject& y) { return ext_space(x, y).dim(); });
}

SerreSweep serre_sweep(FieldSpec field, const std::vector<IndecLabel>& labels, Schedule schedule) {
    const auto objs = objects_of(field, labels);
    const std::size_t n = objs.size();
    SerreSweep out;
    out.pairs.resize(n * n);
    for_each_index(n * n, schedule, [&](std::size_t k) {
        out.pairs[k] = {labels[k / n], labels[k % n], serre_check(objs[k / n], objs[k % n])};
    });
    out.failures = static_cast<std::size_t>(std::count_if(out.pairs.begin(), out.pairs.end(), [](const SerrePairResult& p) { return !p.report.pass; }));
    return out;
}

}  // namespace zdinf
