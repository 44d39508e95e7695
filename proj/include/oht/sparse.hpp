#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "oht/dyadic.hpp"
#include "oht/fit.hpp"
#include "oht/operators.hpp"
#include "oht/report.hpp"
#include "oht/rng.hpp"
#include "oht/signal.hpp"

// Sparse forms and certification, the constructive sparse-domination
// recursion, the Calderon-Zygmund decomposition with level functions, the
// standard / non-standard interval split with Carleson packing, and the
// Rademacher-Menshov chaining bound.

namespace oht {

/// Sorted, disjoint, half-open integer ranges; the representation of the
/// designated sets E_S.
class RangeSet {
public:
    RangeSet() = default;

    static RangeSet interval(std::int64_t b, std::int64_t e) {
        RangeSet r;
        if (e > b) r.ranges_.emplace_back(b, e);
        return r;
    }

    const std::vector<std::pair<std::int64_t, std::int64_t>>& ranges() const noexcept { return ranges_; }

    std::int64_t count() const noexcept {
        std::int64_t n = 0;
        for (const auto& r : ranges_) n += r.second - r.first;
        return n;
    }

    bool contains(std::int64_t x) const noexcept {
        for (const auto& r : ranges_)
            if (x >= r.first && x < r.second) return true;
        return false;
    }

    bool intersects(const RangeSet& o) const noexcept {
        std::size_t i = 0, j = 0;
        while (i < ranges_.size() && j < o.ranges_.size()) {
            if (ranges_[i].second <= o.ranges_[j].first) ++i;
            else if (o.ranges_[j].second <= ranges_[i].first) ++j;
            else return true;
        }
        return false;
    }

    void unite(const RangeSet& o) {
        std::vector<std::pair<std::int64_t, std::int64_t>> all = ranges_;
        all.insert(all.end(), o.ranges_.begin(), o.ranges_.end());
        std::sort(all.begin(), all.end());
        ranges_.clear();
        for (const auto& r : all) {
            if (!ranges_.empty() && r.first <= ranges_.back().second)
                ranges_.back().second = std::max(ranges_.back().second, r.second);
            else
                ranges_.push_back(r);
        }
    }

    void subtract(std::int64_t b, std::int64_t e) {
        if (e <= b) return;
        std::vector<std::pair<std::int64_t, std::int64_t>> out;
        for (const auto& r : ranges_) {
            if (r.second <= b || r.first >= e) { out.push_back(r); continue; }
            if (r.first < b) out.emplace_back(r.first, b);
            if (r.second > e) out.emplace_back(e, r.second);
        }
        ranges_ = std::move(out);
    }

    void subtract(const RangeSet& o) {
        for (const auto& r : o.ranges_) subtract(r.first, r.second);
    }

private:
    std::vector<std::pair<std::int64_t, std::int64_t>> ranges_;
};

struct SparseMember {
    DyadicInterval interval;
    RangeSet designated; // E_S
};

/// Intervals S with pairwise disjoint E_S subsets, |E_S| >= |S|/4.
struct SparseCollection {
    std::vector<SparseMember> members;
    bool certified = false;

    std::size_t size() const noexcept { return members.size(); }
};

struct SparseFormValue {
    double value = 0;
    bool certified_input = true; // warning flag: false when the input was not certified
};

/// Lambda_{S,r,s}(f,g) = sum |S| <f>_{S,r} <g>_{S,s}.
inline SparseFormValue sparse_form(const SparseCollection& coll, const FiniteSignal& f,
                                   const FiniteSignal& g, double r, double s) {
    SparseFormValue out;
    out.certified_input = coll.certified;
    for (const auto& m : coll.members)
        out.value += double(m.interval.length()) * average(f, m.interval, r) * average(g, m.interval, s);
    return out;
}

struct CertifyResult {
    bool ok = false;
    SparseCollection collection;
    std::optional<DyadicInterval> violator;
};

/// Greedy certification: process intervals by increasing length, assign
/// E_S = S minus the points already designated.  Succeeds iff every member
/// keeps at least a quarter of its length.
inline CertifyResult certify_sparse(std::vector<DyadicInterval> intervals) {
    std::sort(intervals.begin(), intervals.end(), [](const DyadicInterval& a, const DyadicInterval& b) {
        if (a.level != b.level) return a.level < b.level;
        if (a.begin() != b.begin()) return a.begin() < b.begin();
        return a.offset < b.offset;
    });
    CertifyResult res;
    RangeSet claimed;
    for (const auto& S : intervals) {
        RangeSet e = RangeSet::interval(S.begin(), S.end());
        e.subtract(claimed);
        if (4 * e.count() < S.length()) {
            res.violator = S;
            return res;
        }
        claimed.unite(e);
        res.collection.members.push_back({S, std::move(e)});
    }
    res.ok = true;
    res.collection.certified = true;
    return res;
}

// ---------------------------------------------------------------------------
// Calderon-Zygmund decomposition
// ---------------------------------------------------------------------------

/// f = good + sum_s levels[s] on I0, where the levels collect f over the
/// maximal dyadic stopping intervals J with <f>_J >= K <f>_{I0}, bucketed by
/// log2 |J|.
struct CZDecomposition {
    DyadicInterval root;
    double threshold; // K
    double root_average;
    std::vector<DyadicInterval> stopping;    // maximal, pairwise disjoint
    std::map<int, FiniteSignal> levels;      // log2|J| -> b_s
    FiniteSignal good;                       // gamma

    FiniteSignal bad() const {
        FiniteSignal b;
        for (const auto& kv : levels) b += kv.second;
        return b;
    }
};

namespace detail {

inline void require_nonnegative(const FiniteSignal& f, const char* who) {
    for (const auto& v : f.values())
        if (v.imag() != 0.0 || v.real() < 0.0)
            throw std::invalid_argument(std::string(who) + ": signal must be real and nonnegative");
}

inline void require_supported_in(const FiniteSignal& f, const DyadicInterval& I0, const char* who) {
    if (!f.is_zero() && (f.begin() < I0.begin() || f.end() > I0.end()))
        throw std::invalid_argument(std::string(who) + ": signal must be supported in the root interval");
}

/// Maximal dyadic J strictly inside `root` satisfying `stop`; top-down scan,
/// so the returned intervals are pairwise disjoint.
template <class Pred>
std::vector<DyadicInterval> maximal_stopping(const DyadicInterval& root, Pred&& stop) {
    std::vector<DyadicInterval> out, work;
    if (root.level > kMinDyadicLevel) {
        const auto [l, r] = root.children();
        work.push_back(l);
        work.push_back(r);
    }
    while (!work.empty()) {
        const DyadicInterval J = work.back();
        work.pop_back();
        if (stop(J)) {
            out.push_back(J);
        } else if (J.level > kMinDyadicLevel) {
            const auto [l, r] = J.children();
            work.push_back(l);
            work.push_back(r);
        }
    }
    std::sort(out.begin(), out.end(), [](const DyadicInterval& a, const DyadicInterval& b) {
        return a.begin() < b.begin();
    });
    return out;
}

} // namespace detail

inline CZDecomposition cz_decompose(const FiniteSignal& f, const DyadicInterval& I0, double K) {
    if (K <= 1.0) throw std::domain_error("cz_decompose: degenerate threshold, K > 1 required");
    detail::require_nonnegative(f, "cz_decompose");
    detail::require_supported_in(f, I0, "cz_decompose");

    CZDecomposition d{I0, K, average(f, I0), {}, {}, {}};
    if (d.root_average == 0.0) {
        d.good = f;
        return d;
    }
    const double cut = K * d.root_average;
    d.stopping = detail::maximal_stopping(I0, [&](const DyadicInterval& J) {
        return average(f, J) >= cut;
    });
    FiniteSignal b;
    for (const auto& J : d.stopping) {
        const FiniteSignal piece = restrict_to(f, J.begin(), J.end());
        d.levels[J.level] += piece;
        b += piece;
    }
    d.good = f - b;
    return d;
}

// ---------------------------------------------------------------------------
// Sparse domination recursion
// ---------------------------------------------------------------------------

struct SparseBuildOptions {
    double stop_threshold = 10.0;  // average multiplier for stopping children
    bool compute_ratio = true;     // also evaluate <T* f, g> / Lambda(f,g)
};

struct SparseBuildResult {
    SparseCollection collection;
    double pairing = 0;        // <T*_{I0} f, g>
    double form_value = 0;     // Lambda_{S,1,r}(f,g)
    double ratio = 0;
    int nodes = 0;
    int max_depth = 0;
    double worst_child_measure = 0; // max over nodes of (sum |J|) / |S|
    bool measure_ok = true;         // sum |J| <= |S|/5 at every node
};

/// The recursion behind the sparse bound: admit S, find the maximal dyadic J
/// with <f>_J >= 10 <f>_S or <g>_J >= 10 <g>_S, designate E_S = S minus the
/// union of the J, and recurse into each J.  The stopping intervals of one
/// node carry at most |S|/5 of its measure.
inline SparseBuildResult build_sparse_collection(const CoeffSequence& a, const FiniteSignal& f,
                                                 const FiniteSignal& g, const DyadicInterval& I0,
                                                 double r, SparseBuildOptions opts = {}) {
    detail::require_nonnegative(f, "build_sparse_collection");
    detail::require_nonnegative(g, "build_sparse_collection");
    detail::require_supported_in(f, I0, "build_sparse_collection");
    detail::require_supported_in(g, I0, "build_sparse_collection");
    if (!(r >= 1.0)) throw std::domain_error("build_sparse_collection: r >= 1 required");

    SparseBuildResult res;
    if (average(f, I0) == 0.0) return res;

    struct Node { DyadicInterval S; int depth; };
    std::vector<Node> work{{I0, 0}};
    while (!work.empty()) {
        const Node node = work.back();
        work.pop_back();
        if (node.depth > I0.level)
            throw std::logic_error("build_sparse_collection: recursion depth exceeded log2|I0|");
        ++res.nodes;
        res.max_depth = std::max(res.max_depth, node.depth);

        const double favg = average(f, node.S);
        const double gavg = average(g, node.S);
        const double fcut = opts.stop_threshold * favg;
        const double gcut = opts.stop_threshold * gavg;
        const auto children = detail::maximal_stopping(node.S, [&](const DyadicInterval& J) {
            return (favg > 0 && average(f, J) >= fcut) || (gavg > 0 && average(g, J) >= gcut);
        });

        std::int64_t child_measure = 0;
        RangeSet e = RangeSet::interval(node.S.begin(), node.S.end());
        for (const auto& J : children) {
            child_measure += J.length();
            e.subtract(J.begin(), J.end());
            work.push_back({J, node.depth + 1});
        }
        const double frac = double(child_measure) / double(node.S.length());
        res.worst_child_measure = std::max(res.worst_child_measure, frac);
        if (5 * child_measure > node.S.length()) res.measure_ok = false;
        res.collection.members.push_back({node.S, std::move(e)});
    }
    res.collection.certified = res.measure_ok;

    if (opts.compute_ratio) {
        const FiniteSignal tf = t_star(TruncationFamily::all_dyadic_in(I0), a, f);
        double pairing = 0;
        for (std::int64_t x = g.begin(); x < g.end(); ++x)
            pairing += std::abs(tf.at(x)) * g.at(x).real();
        res.pairing = pairing;
        res.form_value = sparse_form(res.collection, f, g, 1.0, r).value;
        res.ratio = res.form_value > 0 ? res.pairing / res.form_value : 0.0;
    }
    return res;
}

// ---------------------------------------------------------------------------
// Standard / non-standard classification
// ---------------------------------------------------------------------------

struct ClassifiedInterval {
    DyadicInterval interval;
    int cz_level;      // level of the b-layer this interval acts on (= scale - s)
    double norm2sq;    // ||T_I b_{k-s}||_2^2, exact
    double mass;       // ||b_{k-s} 1_{I~}||_1 over the operator's input window
    double threshold;  // 64 C0 |I|^{-1-eps} mass^2
    bool standard;
    int t;             // density bucket, non-standard members only
};

/// Partition of the working intervals at one offset s into standard and
/// non-standard families, with non-standard members bucketed by dyadic
/// density class and peeled into layers of minimal elements.
struct IntervalClassification {
    int s = 0;
    double C0 = 0;
    double eps_hat = 0;
    std::vector<ClassifiedInterval> standard;
    std::vector<ClassifiedInterval> nonstandard;
    std::map<int, std::vector<DyadicInterval>> buckets;                // t -> N_{s,t}
    std::map<int, std::vector<std::vector<DyadicInterval>>> layers;    // t -> M_1, M_2, ...
    int max_t_minus_s = 0;
};

namespace detail {

/// Peel a family into layers of minimal elements: M_1 = members containing
/// no other member, M_{u+1} = minimal among the rest.
inline std::vector<std::vector<DyadicInterval>> peel_minimal_layers(std::vector<DyadicInterval> v) {
    std::vector<std::vector<DyadicInterval>> layers;
    while (!v.empty()) {
        std::vector<DyadicInterval> minimal, rest;
        for (const auto& I : v) {
            bool contains_other = false;
            for (const auto& J : v)
                if (!(J == I) && I.contains(J)) { contains_other = true; break; }
            (contains_other ? rest : minimal).push_back(I);
        }
        if (minimal.empty())
            throw std::logic_error("peel_minimal_layers: no minimal element");
        layers.push_back(std::move(minimal));
        v = std::move(rest);
    }
    return layers;
}

} // namespace detail

/// Apply the standardness test ||T_I b_{k-s}||_2^2 <= 64 C0 |I|^{-1-eps}
/// ||b_{k-s} 1_{I~}||_1^2 to every working interval (those not swallowed by
/// the stopping set), with density buckets t = ceil(-log2 mass/|I|).
inline IntervalClassification classify_intervals(const CZDecomposition& decomp,
                                                 const CoeffSequence& a, int s,
                                                 double C0, double eps_hat) {
    if (s < 0) throw std::invalid_argument("classify_intervals: s >= 0 required");
    if (C0 <= 0) throw std::invalid_argument("classify_intervals: C0 > 0 required");
    IntervalClassification cls;
    cls.s = s;
    cls.C0 = C0;
    cls.eps_hat = eps_hat;

    RangeSet stopped;
    for (const auto& J : decomp.stopping) stopped.unite(RangeSet::interval(J.begin(), J.end()));

    for (const auto& [cz_level, b] : decomp.levels) {
        if (b.is_zero()) continue;
        const int level = cz_level + s + 3; // |I| = 2^{k+3}, k = cz_level + s
        if (level > decomp.root.level) continue;
        for (const auto& I : scale_partition(level, decomp.root.offset, decomp.root.begin(), decomp.root.end())) {
            if (!decomp.root.contains(I)) continue;
            // working family: I not swallowed by the stopping set
            RangeSet cell = RangeSet::interval(I.begin(), I.end());
            cell.subtract(stopped);
            if (cell.count() == 0) continue;
            // every stopping interval meeting a working interval is strictly inside it
            for (const auto& J : decomp.stopping)
                if (J.intersects(I) && !(I.contains(J) && J.length() < I.length()))
                    throw std::logic_error("classify_intervals: stopping interval not strictly inside");

            const LocalizedOp op(I, a);
            const FiniteSignal tb = apply_localized(op, b);
            const double norm2sq = tb.l2() * tb.l2();
            const IntWindow e = op.enlarged();
            const double mass = restrict_to(b, e.begin, e.end).l1();
            const double thr = 64.0 * C0 * std::pow(double(I.length()), -1.0 - eps_hat) * mass * mass;

            ClassifiedInterval ci{I, cz_level, norm2sq, mass, thr, norm2sq <= thr, 0};
            if (ci.standard) {
                cls.standard.push_back(ci);
            } else {
                // mass > 0 here: zero mass forces T_I b = 0 and the standard test passes
                const double density = mass / double(I.length());
                ci.t = int(std::ceil(-std::log2(density)));
                cls.max_t_minus_s = std::max(cls.max_t_minus_s, ci.t - s);
                cls.buckets[ci.t].push_back(I);
                cls.nonstandard.push_back(ci);
            }
        }
    }
    for (const auto& kv : cls.buckets)
        cls.layers[kv.first] = detail::peel_minimal_layers(kv.second);
    return cls;
}

/// Carleson packing of each density bucket: for every member K,
/// sum_{J in bucket, J subset K} |J| <= C 2^t |K|.
inline ExperimentReport carleson_check(const IntervalClassification& cls, double C = 64.0) {
    ExperimentReport rep;
    rep.name = "carleson";
    rep.columns = {"t", "bucket_size", "max_packing_ratio", "bound"};
    double worst_over_bound = 0;
    bool ok = true;
    for (const auto& [t, bucket] : cls.buckets) {
        double worst = 0;
        for (const auto& K : bucket) {
            std::int64_t packed = 0;
            for (const auto& J : bucket)
                if (K.contains(J)) packed += J.length();
            worst = std::max(worst, double(packed) / double(K.length()));
        }
        const double bound = C * std::pow(2.0, double(t));
        if (worst > bound) ok = false;
        worst_over_bound = std::max(worst_over_bound, worst / bound);
        rep.add_row({double(t), double(bucket.size()), worst, bound});
    }
    rep.set("C", C);
    rep.set("worst_over_bound", worst_over_bound);
    rep.set_flag("carleson_ok", ok);
    return rep;
}

// ---------------------------------------------------------------------------
// Rademacher-Menshov chaining
// ---------------------------------------------------------------------------

struct RMResult {
    FiniteSignal bound;       // pointwise chaining bound
    double bessel_hat = 0;    // sampled Bessel constant A
    int level_count = 0;      // 1 + ceil(log2 N)
    double bound_l2 = 0;
    double certificate = 0;   // level_count * bessel_hat
    bool l2_ok = false;       // bound_l2 <= certificate
};

/// Dyadic chaining for running maxima of partial sums: every prefix [1, n]
/// splits into at most one aligned block per binary level, so
/// max_n |sum_{j<=n} phi_j| <= sum_levels max_blocks |block sum| pointwise.
/// The Bessel constant of (the paper's) orthogonality hypothesis is sampled
/// over random sign patterns c_j in {0,+-1}, including the block-aligned
/// patterns the chaining argument actually consumes.
inline RMResult rm_maximal(const std::vector<FiniteSignal>& phis, int sign_samples = 256,
                           std::uint64_t seed = 0x5eedu) {
    const std::size_t N = phis.size();
    if (N == 0) throw std::invalid_argument("rm_maximal: empty family");

    int levels = 1;
    while ((std::size_t(1) << (levels - 1)) < N) ++levels; // 1 + ceil(log2 N)

    RMResult res;
    res.level_count = levels;

    // common dense window
    std::int64_t lo = 0, hi = 1;
    bool first = true;
    for (const auto& phi : phis) {
        if (phi.is_zero()) continue;
        if (first) { lo = phi.begin(); hi = phi.end(); first = false; }
        lo = std::min(lo, phi.begin());
        hi = std::max(hi, phi.end());
    }
    const std::size_t W = std::size_t(hi - lo);
    std::vector<double> bound(W, 0.0);

    for (int l = 0; l < levels; ++l) {
        const std::size_t len = std::size_t(1) << l;
        std::vector<double> lvl_max(W, 0.0);
        std::vector<cplx> blk(W);
        for (std::size_t q = 0; (q + 1) * len <= N; ++q) {
            std::fill(blk.begin(), blk.end(), cplx{});
            for (std::size_t j = q * len; j < (q + 1) * len; ++j)
                for (std::int64_t x = phis[j].begin(); x < phis[j].end(); ++x)
                    blk[std::size_t(x - lo)] += phis[j].at(x);
            for (std::size_t i = 0; i < W; ++i)
                lvl_max[i] = std::max(lvl_max[i], std::abs(blk[i]));
        }
        for (std::size_t i = 0; i < W; ++i) bound[i] += lvl_max[i];
    }
    std::vector<cplx> bvals(W);
    for (std::size_t i = 0; i < W; ++i) bvals[i] = bound[i];
    res.bound = FiniteSignal(lo, std::move(bvals));
    res.bound_l2 = res.bound.l2();

    // Sampled Bessel constant: block-aligned sign patterns per level plus
    // free random coefficient patterns.
    double a_hat = 0;
    int sample = 0;
    auto try_pattern = [&](const std::vector<int>& c) {
        FiniteSignal s;
        for (std::size_t j = 0; j < N; ++j)
            if (c[j] != 0) s += (c[j] > 0 ? phis[j] : phis[j] * cplx(-1.0, 0.0));
        a_hat = std::max(a_hat, s.l2());
    };
    const int per_level = std::max(1, sign_samples / (2 * levels));
    for (int l = 0; l < levels; ++l) {
        const std::size_t len = std::size_t(1) << l;
        const std::size_t blocks = N / len;
        if (blocks == 0) continue;
        for (int rep_i = 0; rep_i < per_level; ++rep_i) {
            rng::Stream gen(rng::derive(seed, std::uint64_t(l * 1000 + rep_i)));
            std::vector<int> c(N, 0);
            for (std::size_t q = 0; q < blocks; ++q) {
                const int sgn = gen.sign();
                for (std::size_t j = q * len; j < (q + 1) * len; ++j) c[j] = sgn;
            }
            try_pattern(c);
            ++sample;
        }
    }
    while (sample < sign_samples) {
        rng::Stream gen(rng::derive(seed, 0xF00Du + std::uint64_t(sample)));
        std::vector<int> c(N);
        for (auto& v : c) {
            const double u = gen.unit();
            v = u < 1.0 / 3 ? -1 : (u < 2.0 / 3 ? 0 : 1);
        }
        try_pattern(c);
        ++sample;
    }
    res.bessel_hat = a_hat;
    res.certificate = double(levels) * a_hat;
    res.l2_ok = res.bound_l2 <= res.certificate * (1.0 + 1e-12);
    return res;
}

// ---------------------------------------------------------------------------
// Decay in the Calderon-Zygmund offset s
// ---------------------------------------------------------------------------

/// For each s, assemble the maximal sums whose scale-k piece acts on the
/// level b_{k-s}, split by the standardness test, and fit the decay of
/// ||T*_{S_s,s} b||_{r'} and ||T*_{N_s,s} b||_2 in s.
inline ExperimentReport decay_in_s_report(const CoeffSequence& a, const FiniteSignal& f,
                                          const DyadicInterval& I0, double r,
                                          int s_min, int s_max, double cz_threshold = 10.0,
                                          double C0 = 1.0, double eps_hat = 0.05) {
    if (!(r > 1.0 && r < 2.0)) throw std::domain_error("decay_in_s_report: r in (1,2) required");
    ExperimentReport rep;
    rep.name = "decay_in_s";
    rep.columns = {"s", "std_rprime_norm", "nonstd_l2_norm", "std_count", "nonstd_count"};

    const CZDecomposition decomp = cz_decompose(f, I0, cz_threshold);
    const double rprime = r / (r - 1.0);

    std::vector<double> xs_std, ys_std, xs_non, ys_non;
    for (int s = s_min; s <= s_max; ++s) {
        const IntervalClassification cls = classify_intervals(decomp, a, s, C0, eps_hat);

        auto assemble = [&](const std::vector<ClassifiedInterval>& members) {
            TruncationFamily fam(I0.offset);
            std::map<int, FiniteSignal> inputs; // level -> b_{level-3-s}
            for (const auto& ci : members) {
                fam.add(ci.interval);
                const auto it = decomp.levels.find(ci.cz_level);
                if (it != decomp.levels.end()) inputs[ci.interval.level] = it->second;
            }
            if (fam.empty()) return FiniteSignal{};
            return t_star_by_scale(fam, a, [&inputs](int level) -> const FiniteSignal* {
                const auto it = inputs.find(level);
                return it == inputs.end() ? nullptr : &it->second;
            });
        };

        const FiniteSignal std_branch = assemble(cls.standard);
        const FiniteSignal non_branch = assemble(cls.nonstandard);
        const double std_norm = std_branch.is_zero() ? 0.0 : std_branch.lp(rprime);
        const double non_norm = non_branch.l2();
        rep.add_row({double(s), std_norm, non_norm,
                     double(cls.standard.size()), double(cls.nonstandard.size())});
        if (std_norm > 0) { xs_std.push_back(double(s)); ys_std.push_back(std::log2(std_norm)); }
        if (non_norm > 0) { xs_non.push_back(double(s)); ys_non.push_back(std::log2(non_norm)); }
    }

    rep.set("r", r);
    rep.set("reference_rate_std", -1.0 / (3.0 * (r - 1.0)));
    rep.set("reference_rate_nonstd", -1.0 / 3.0);
    if (xs_std.size() >= 3) {
        const LineFit fit = fit_line(xs_std, ys_std);
        rep.set("fitted_rate_std", fit.slope);
    } else {
        rep.set("trivial_fit_std", 1.0);
    }
    if (xs_non.size() >= 3) {
        const LineFit fit = fit_line(xs_non, ys_non);
        rep.set("fitted_rate_nonstd", fit.slope);
    } else {
        rep.set("trivial_fit_nonstd", 1.0);
    }
    return rep;
}

} // namespace oht
