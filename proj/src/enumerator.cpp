#include "cusp/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <map>
#include <thread>
#include <tuple>

namespace cusp {

namespace {

// Degrees past this would need semigroup tables beyond the supported size.
constexpr i128 kMaxEnumerationDegree = 5000;

// 2*delta at the smallest admissible (q1, q2) for a fixed (p1, p2); used for
// exact loop exits. delta is strictly increasing in q1 (coefficient
// p2*(p1*p2 - 1) > 0) and in q2 (coefficient p2 - 1 > 0 for p2 >= 2).
i128 two_delta_floor_p1(i128 p1, i128 p2) {
    return p1 * p2 * ((p1 + 1) * p2 - 2);
}

struct Prefix {
    i128 p2;
    i128 p1;
};

std::vector<Prefix> collect_prefixes(i128 two_delta_max) {
    std::vector<Prefix> prefixes;
    for (i128 p2 = 2;; ++p2) {
        if (p2 * (6 * p2 - 4) > two_delta_max) break; // floor over all (p1,q1,q2)
        for (i128 p1 = 2;; ++p1) {
            if (two_delta_floor_p1(p1, p2) > two_delta_max) break;
            prefixes.push_back({p2, p1});
        }
    }
    return prefixes;
}

template <typename Fn>
void scan_prefix(i128 p2, i128 p1, i128 two_delta_max, Fn&& fn) {
    assert(p2 >= 2); // q2-monotonicity of delta needs a positive q2-coefficient
    for (i128 q1 = p1 + 1;; ++q1) {
        // 2*delta = base + q2*(p2 - 1) with base at the q2-free part
        const i128 base = p1 * q1 * p2 * p2 - p1 * p2 - q1 * p2 + 1;
        if (base + (p2 - 1) > two_delta_max) break; // exact: minimum is at q2 = 1
        if (gcd_exact(p1, q1) != 1) continue;
        const i128 q2_max = (two_delta_max - base) / (p2 - 1);
        for (i128 q2 = 1; q2 <= q2_max; ++q2) {
            if (gcd_exact(p2, q2) != 1) continue;
            const i128 two_delta = base + q2 * (p2 - 1);
            if (two_delta % 2 != 0)
                throw std::logic_error("delta numerator must be even");
            fn(p1, q1, p2, q2, two_delta / 2);
        }
    }
}

struct RawPass {
    i128 p1, q1, p2, q2;
    i128 delta;
    i128 degree;
};

struct Shard {
    EnumerationStats stats;
    std::vector<RawPass> passes;
};

void scan_shard(const Prefix& prefix, i128 two_delta_max, Shard& shard) {
    scan_prefix(prefix.p2, prefix.p1, two_delta_max,
                [&](i128 p1, i128 q1, i128 p2, i128 q2, i128 dlt) {
                    ++shard.stats.scanned;
                    const DegreeFromDelta deg = degree_from_delta(dlt);
                    if (!deg.found()) {
                        ++shard.stats.no_integer_degree;
                        return;
                    }
                    const NewtonPairType type{p1, q1, p2, q2};
                    const NumericalSemigroup s = build_semigroup(semigroup_generators(type), dlt);
                    const CriterionReport report = check_sdp(s, deg.degree);
                    if (!report.passed()) {
                        ++shard.stats.sdp_failures;
                        return;
                    }
                    ++shard.stats.passes;
                    shard.passes.push_back({p1, q1, p2, q2, dlt, deg.degree});
                });
}

} // namespace

void for_each_valid_type(i128 delta_max,
                         const std::function<void(i128, i128, i128, i128, i128)>& fn) {
    const i128 two_delta_max = checked_mul(2, delta_max);
    for (const Prefix& prefix : collect_prefixes(two_delta_max))
        scan_prefix(prefix.p2, prefix.p1, two_delta_max, fn);
}

EnumerationReport enumerate_candidates(i128 max_degree, unsigned workers) {
    if (max_degree < 3)
        throw BoundTooSmall("max degree must be at least 3");
    if (max_degree > kMaxEnumerationDegree)
        throw std::invalid_argument("max degree above the supported bound " +
                                    to_dec(kMaxEnumerationDegree));
    const auto start = std::chrono::steady_clock::now();
    const i128 two_delta_max = (max_degree - 1) * (max_degree - 2);

    const std::vector<Prefix> prefixes = collect_prefixes(two_delta_max);
    // Workers own disjoint (p2, p1) prefixes. Shard results are merged by a
    // global sort, so the report does not depend on scheduling.
    const unsigned used =
        std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(prefixes.size(), 1))));

    std::vector<Shard> shards(used);
    if (used == 1) {
        for (const Prefix& prefix : prefixes)
            scan_shard(prefix, two_delta_max, shards[0]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(used);
        for (unsigned w = 0; w < used; ++w) {
            pool.emplace_back([&, w] {
                for (;;) {
                    const std::size_t idx = next.fetch_add(1);
                    if (idx >= prefixes.size()) break;
                    scan_shard(prefixes[idx], two_delta_max, shards[w]);
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    EnumerationReport report;
    report.max_degree = max_degree;
    std::vector<RawPass> merged;
    for (Shard& shard : shards) {
        report.stats.scanned += shard.stats.scanned;
        report.stats.no_integer_degree += shard.stats.no_integer_degree;
        report.stats.sdp_failures += shard.stats.sdp_failures;
        report.stats.passes += shard.stats.passes;
        merged.insert(merged.end(), shard.passes.begin(), shard.passes.end());
    }
    std::sort(merged.begin(), merged.end(), [](const RawPass& a, const RawPass& b) {
        return std::tie(a.degree, a.p1, a.q1, a.p2, a.q2) <
               std::tie(b.degree, b.p1, b.q1, b.p2, b.q2);
    });

    report.candidates.reserve(merged.size());
    for (const RawPass& raw : merged) {
        PassEntry entry;
        entry.type = NewtonPairType{raw.p1, raw.q1, raw.p2, raw.q2};
        entry.degree = raw.degree;
        entry.delta = raw.delta;
        entry.cbar_sq = cbar_squared(entry.type, raw.degree);
        entry.families = identify(ValidatedType{entry.type}, raw.degree);
        for (const ExceptionalType& exc : known_exceptions())
            if (exc.ntype == entry.type && exc.degree == raw.degree)
                entry.known_exception = true;
        report.candidates.push_back(std::move(entry));
    }

    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

CrossCheckDiff cross_check(const EnumerationReport& report) {
    using Key = std::tuple<i128, i128, i128, i128, i128>;
    const auto key_of = [](const NewtonPairType& t, i128 d) {
        return Key{t.p1, t.q1, t.p2, t.q2, d};
    };

    std::map<Key, FamilyInstance> expected;
    for (const FamilyId f : kAllFamilies) {
        for_each_instance(f, report.max_degree, [&](const FamilyInstance& inst) {
            if (inst.degenerate) return; // one-pair degenerations sit outside the two-pair scan
            expected.emplace(key_of(std::get<NewtonPairType>(inst.ntype), inst.degree), inst);
        });
    }

    std::map<Key, const PassEntry*> passed;
    for (const PassEntry& entry : report.candidates)
        passed.emplace(key_of(entry.type, entry.degree), &entry);

    CrossCheckDiff diff;
    for (const auto& [key, inst] : expected)
        if (!passed.contains(key)) diff.missing.push_back(inst);
    for (const PassEntry& entry : report.candidates)
        if (entry.unexpected()) diff.unexpected.push_back(entry);
    return diff;
}

CrossCheckDiff cross_check(i128 max_degree, unsigned workers) {
    return cross_check(enumerate_candidates(max_degree, workers));
}

} // namespace cusp
