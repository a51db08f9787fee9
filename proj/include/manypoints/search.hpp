/*
   Copyright 2026 The manypoints Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MANYPOINTS_SEARCH_HPP
#define MANYPOINTS_SEARCH_HPP

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "classify.hpp"
#include "curves.hpp"
#include "error.hpp"
#include "finite_field.hpp"
#include "hasse.hpp"
#include "number_theory.hpp"
#include "parallel.hpp"
#include "poly_fp.hpp"

namespace manypoints {

/**
 * Size limits for the sweeps. Rough single-thread costs: a full family sweep
 * is q^2 byte multiply-adds (q = 2^16 takes a few seconds); the quartic
 * brute force is q^2 field operations per lambda.
 */
struct SearchLimits {
    u64 sweep_cap = u64{1} << 16;
    u64 quartic_cap = kDefaultQuarticCap;
    u64 hasse_prime_cap = 20000;
};

inline void require_sweepable(u64 q, const SearchLimits& limits) {
    if (q > limits.sweep_cap)
        throw DomainError(Errc::BudgetExceeded,
                          "sweep over q=" + std::to_string(q) + " exceeds cap " + std::to_string(limits.sweep_cap));
}

inline LegendreSweep make_sweep(u64 q, const SearchLimits& limits = {}) {
    require_odd_prime_power(q);
    require_sweepable(q, limits);
    return LegendreSweep(Field::of_order(q));
}

struct BestCurveRecord {
    u64 q = 0;
    ElementIndex best_lambda = 0;
    u64 elliptic_count = 0;
    u64 quartic_count_predicted = 0;
    i64 hws_gap = 0;

    friend bool operator==(const BestCurveRecord&, const BestCurveRecord&) = default;
};

/// Largest and smallest #E^(lambda+3)_lambda over the family, smallest lambda on ties.
struct FamilyExtremes {
    ElementIndex max_lambda = 0;
    u64 max_count = 0;
    ElementIndex min_lambda = 0;
    u64 min_count = std::numeric_limits<u64>::max();
    bool empty = true;
};

namespace detail {

inline FamilyExtremes merge_extremes(FamilyExtremes a, const FamilyExtremes& b) {
    if (b.empty) return a;
    if (a.empty) return b;
    if (b.max_count > a.max_count || (b.max_count == a.max_count && b.max_lambda < a.max_lambda)) {
        a.max_count = b.max_count;
        a.max_lambda = b.max_lambda;
    }
    if (b.min_count < a.min_count || (b.min_count == a.min_count && b.min_lambda < a.min_lambda)) {
        a.min_count = b.min_count;
        a.min_lambda = b.min_lambda;
    }
    return a;
}

}  // namespace detail

inline FamilyExtremes family_extremes(const LegendreSweep& sweep, unsigned workers = 1) {
    const Field& f = sweep.field();
    return parallel_map_reduce(
        0, f.q(), workers, FamilyExtremes{},
        [&](u64 lo, u64 hi) {
            FamilyExtremes ext;
            for (ElementIndex lambda = lo; lambda < hi; ++lambda) {
                if (!is_family_parameter(f, lambda)) continue;
                const u64 n = sweep.family_count(lambda);
                FamilyExtremes one{lambda, n, lambda, n, false};
                ext = detail::merge_extremes(ext, one);
            }
            return ext;
        },
        detail::merge_extremes);
}

inline u64 quartic_from_elliptic(u64 q, u64 elliptic) noexcept { return 3 * elliptic - 2 * q - 2; }

/// The lambda maximizing #E^(lambda+3)_lambda(F_q), hence #C_lambda(F_q).
inline BestCurveRecord best_curve(const LegendreSweep& sweep, unsigned workers = 1) {
    const u64 q = sweep.field().q();
    const FamilyExtremes ext = family_extremes(sweep, workers);
    if (ext.empty) throw DomainError(Errc::EmptySweep, "no valid lambda over F_" + std::to_string(q));
    BestCurveRecord r;
    r.q = q;
    r.best_lambda = ext.max_lambda;
    r.elliptic_count = ext.max_count;
    r.quartic_count_predicted = quartic_from_elliptic(q, ext.max_count);
    r.hws_gap = static_cast<i64>(hws_bound(q, 3)) - static_cast<i64>(r.quartic_count_predicted);
    return r;
}

inline BestCurveRecord best_curve(u64 q, unsigned workers = 1, const SearchLimits& limits = {}) {
    return best_curve(make_sweep(q, limits), workers);
}

enum class MissingTag { Max, Min, Interior };

constexpr std::string_view tag_name(MissingTag t) noexcept {
    switch (t) {
        case MissingTag::Max: return "max";
        case MissingTag::Min: return "min";
        case MissingTag::Interior: return "interior";
    }
    return "interior";
}

/**
 * Which possible counts (see possible_family_counts) occur as
 * #E^(lambda+3)_lambda(F_q). `achieved` maps each attained count to its smallest witness lambda.
 */
struct SurveyReport {
    u64 q = 0;
    std::map<u64, ElementIndex> achieved;
    std::vector<u64> missing;
    std::vector<MissingTag> tags;

    friend bool operator==(const SurveyReport&, const SurveyReport&) = default;
};

/**
 * Multiples of 4 that are elliptic group orders over F_q, ascending.
 *
 * These are the counts a survey can miss. For prime q this is every multiple
 * of 4 in [q+1-m, q+1+m]; for prime powers, counts whose trace is divisible by
 * p without being a supersingular trace are excluded.
 */
inline std::vector<u64> possible_family_counts(u64 q) {
    std::vector<u64> out;
    for (u64 n : admissible_group_orders(q))
        if (n % 4 == 0) out.push_back(n);
    return out;
}

inline SurveyReport family_survey(const LegendreSweep& sweep, unsigned workers = 1) {
    const Field& f = sweep.field();
    using Witnesses = std::map<u64, ElementIndex>;
    const auto merge = [](Witnesses a, const Witnesses& b) {
        for (const auto& [count, lambda] : b) {
            auto [it, inserted] = a.emplace(count, lambda);
            if (!inserted && lambda < it->second) it->second = lambda;
        }
        return a;
    };
    SurveyReport report;
    report.q = f.q();
    report.achieved = parallel_map_reduce(
        0, f.q(), workers, Witnesses{},
        [&](u64 lo, u64 hi) {
            Witnesses w;
            for (ElementIndex lambda = lo; lambda < hi; ++lambda)
                if (is_family_parameter(f, lambda)) w.emplace(sweep.family_count(lambda), lambda);
            return w;
        },
        merge);

    const std::vector<u64> possible = possible_family_counts(f.q());
    for (u64 n : possible) {
        if (report.achieved.count(n)) continue;
        report.missing.push_back(n);
        report.tags.push_back(n == possible.back()    ? MissingTag::Max
                              : n == possible.front() ? MissingTag::Min
                                                      : MissingTag::Interior);
    }
    return report;
}

inline SurveyReport family_survey(u64 q, unsigned workers = 1, const SearchLimits& limits = {}) {
    return family_survey(make_sweep(q, limits), workers);
}

inline constexpr std::string_view kSurveyCsvHeader = "q,missing_count,missing_values,tags";

/// One row of the survey CSV: q,missing_count,missing_values,tags.
inline std::string survey_csv_row(const SurveyReport& r) {
    std::ostringstream out;
    out << r.q << ',' << r.missing.size() << ',';
    for (std::size_t i = 0; i < r.missing.size(); ++i) out << (i ? ";" : "") << r.missing[i];
    out << ',';
    for (std::size_t i = 0; i < r.tags.size(); ++i) out << (i ? ";" : "") << tag_name(r.tags[i]);
    return out.str();
}

enum class FindMethod { Naive, Hasse };

namespace detail {

inline std::optional<ElementIndex> find_lambda_naive(const LegendreSweep& sweep, u64 target) {
    const Field& f = sweep.field();
    for (ElementIndex lambda = 0; lambda < f.q(); ++lambda)
        if (is_family_parameter(f, lambda) && sweep.family_count(lambda) == target) return lambda;
    return std::nullopt;
}

// Residue of an integer mod p.
inline u64 residue(i64 v, u64 p) noexcept { return reduce_signed(v, p); }

inline std::optional<ElementIndex> find_lambda_hasse(const LegendreSweep& sweep, u64 target, u64 seed) {
    const Field& f = sweep.field();
    const u64 p = f.p();
    const i64 t = static_cast<i64>(f.q()) + 1 - static_cast<i64>(target);
    if (static_cast<u64>(t < 0 ? -t : t) * static_cast<u64>(t < 0 ? -t : t) > 4 * f.q()) return std::nullopt;
    const PolyFp hasse = hasse_polynomial(p);

    // The twist E^(lambda+3) has trace chi(lambda+3) t_E, and t_E mod p is the Hasse residue,
    // so a witness needs residue(lambda) = chi(lambda+3) t mod p. Every candidate is
    // confirmed by an exact count, since the congruence alone does not pin t.
    const auto confirmed = [&](ElementIndex lambda) {
        return is_family_parameter(f, lambda) && sweep.family_count(lambda) == target;
    };

    if (f.n() == 1) {
        const u64 sign = ((p - 1) / 2) % 2 == 1 ? p - 1 : 1;  // (-1)^((p-1)/2)
        std::set<ElementIndex> candidates;
        for (const int s : {1, -1}) {
            // (-1)^((p-1)/2) H_p(lambda) = s t  <=>  H_p(lambda) - (-1)^((p-1)/2) s t = 0
            const u64 rhs = mulmod(sign, residue(s * t, p), p);
            const PolyFp equation = hasse - PolyFp(p, {rhs});
            for (u64 root : poly_roots(equation, seed)) {
                if (is_family_parameter(f, root) && f.chi(family_twist(f, root)) == s) candidates.insert(root);
            }
        }
        for (ElementIndex lambda : candidates)
            if (confirmed(lambda)) return lambda;
        return std::nullopt;
    }

    // q = p^2: H_p(lambda^p) = H_p(lambda)^p, so H_p(lambda) H_p(lambda^p) is the norm of
    // H_p(lambda), which is what hasse_trace_residue returns.
    const u64 t_pos = residue(t, p), t_neg = residue(-t, p);
    for (ElementIndex lambda = 0; lambda < f.q(); ++lambda) {
        if (!is_family_parameter(f, lambda)) continue;
        const u64 norm = hasse_trace_residue(f, hasse, lambda);
        const u64 want = sweep.chi()(family_twist(f, lambda)) == 1 ? t_pos : t_neg;
        if (norm == want && confirmed(lambda)) return lambda;
    }
    return std::nullopt;
}

}  // namespace detail

/**
 * Some lambda with #E^(lambda+3)_lambda(F_q) = target, or nothing.
 *
 * Naive sweeps lambda in index order. Hasse (q = p or p^2 only) restricts to
 * lambda whose Hasse residue matches the target trace, found by root finding
 * over F_p or by a norm sweep over F_{p^2}. Both return the smallest witness.
 */
inline std::optional<ElementIndex> find_lambda(const LegendreSweep& sweep, u64 target, FindMethod method, u64 seed = 0,
                                               const SearchLimits& limits = {}) {
    const Field& f = sweep.field();
    if (target % 4 != 0) throw DomainError(Errc::BadTarget, "target must be a multiple of 4");
    if (method == FindMethod::Naive) return detail::find_lambda_naive(sweep, target);
    if (f.n() > 2) throw DomainError(Errc::UnsupportedField, "Hasse method needs q = p or q = p^2");
    if (f.p() > limits.hasse_prime_cap)
        throw DomainError(Errc::BudgetExceeded, "Hasse method capped at p <= " + std::to_string(limits.hasse_prime_cap));
    return detail::find_lambda_hasse(sweep, target, seed);
}

inline std::optional<ElementIndex> find_lambda(u64 q, u64 target, FindMethod method, u64 seed = 0,
                                               const SearchLimits& limits = {}) {
    if (target % 4 != 0) throw DomainError(Errc::BadTarget, "target must be a multiple of 4");
    return find_lambda(make_sweep(q, limits), target, method, seed, limits);
}

/// Known N_q(3) for odd q: exact values, or lower bounds where `exact` is false.
struct KnownNq3 {
    u64 value;
    bool exact;
};

inline std::optional<KnownNq3> known_nq3(u64 q) {
    // Odd-q entries of the classical table; 49 is the Fermat quartic attaining q + 1 + 6p.
    static const std::map<u64, KnownNq3> table{
        {3, {10, true}},  {5, {16, true}},  {7, {20, true}},  {9, {28, true}},   {11, {28, true}},
        {13, {32, true}}, {17, {40, true}}, {19, {44, true}}, {23, {48, true}},  {25, {56, true}},
        {27, {56, true}}, {29, {60, true}}, {31, {56, false}}, {37, {68, false}}, {41, {72, false}},
        {49, {92, true}},
    };
    const auto it = table.find(q);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

struct Nq3Row {
    u64 q = 0;
    u64 family_best = 0;
    std::optional<KnownNq3> known;
    u64 hws = 0;
    i64 gap_to_hws = 0;
};

inline std::vector<Nq3Row> nq3_lower_table(const std::vector<u64>& q_list, unsigned workers = 1,
                                           const SearchLimits& limits = {}) {
    std::vector<Nq3Row> rows;
    rows.reserve(q_list.size());
    for (u64 q : q_list) {
        const BestCurveRecord best = best_curve(q, workers, limits);
        rows.push_back(Nq3Row{q, best.quartic_count_predicted, known_nq3(q), hws_bound(q, 3), best.hws_gap});
    }
    return rows;
}

/**
 * #E the characteristic-3 argument guarantees over F_{3^n}.
 *
 * Round q + 1 + m down to a multiple of 4. For odd n, step down by 4 when
 * the trace of that count is divisible by 3 and inadmissible (first at n = 11;
 * at n = 1 the trace is 0, which is admissible). For even n the top count
 * q + 1 + m is used when n = 2 mod 4 and q + 1 + m - 4 when n = 0 mod 4.
 */
inline u64 char3_proof_elliptic_count(unsigned n) {
    const u64 q = *checked_power(3, n);
    const u64 m = floor_two_sqrt(q);
    if (n % 2 == 0) return n % 4 == 2 ? q + 1 + m : q + 1 + m - 4;
    u64 count = (q + 1 + m) / 4 * 4;
    const i64 t = static_cast<i64>(q) + 1 - static_cast<i64>(count);
    if (count % 3 == 1 && !is_admissible_trace(3, n, t)) count -= 4;
    return count;
}

struct Char3Row {
    unsigned n = 0;
    u64 q = 0;
    u64 hws = 0;
    u64 family_best = 0;
    i64 gap = 0;
    u64 guaranteed_gap = 0;
    u64 proof_count = 0;
    bool within_guarantee = false;
};

inline std::vector<Char3Row> char3_verify(unsigned n_max, unsigned workers = 1, const SearchLimits& limits = {}) {
    std::vector<Char3Row> rows;
    for (unsigned n = 1; n <= n_max; ++n) {
        const auto q = checked_power(3, n, limits.sweep_cap);
        if (!q) throw DomainError(Errc::BudgetExceeded, "3^" + std::to_string(n) + " exceeds the sweep cap");
        const BestCurveRecord best = best_curve(*q, workers, limits);
        Char3Row row;
        row.n = n;
        row.q = *q;
        row.hws = hws_bound(*q, 3);
        row.family_best = best.quartic_count_predicted;
        row.gap = best.hws_gap;
        row.guaranteed_gap = char3_guaranteed_gap(n);
        row.proof_count = quartic_from_elliptic(*q, char3_proof_elliptic_count(n));
        row.within_guarantee = row.gap <= static_cast<i64>(row.guaranteed_gap);
        rows.push_back(row);
    }
    return rows;
}

/// Odd prime powers in [lo, hi], ascending.
inline std::vector<u64> odd_prime_powers(u64 lo, u64 hi) {
    std::vector<u64> out;
    for (u64 q = std::max<u64>(lo, 3); q <= hi; ++q) {
        if (q % 2 == 0) continue;
        if (prime_power(q)) out.push_back(q);
    }
    return out;
}

}  // namespace manypoints

#endif  // MANYPOINTS_SEARCH_HPP
