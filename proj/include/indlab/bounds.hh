#pragma once

#include <indlab/rational.hh>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace indlab
{
    enum class BoundKind
    {
        lower,
        upper,
        count_upper,
        reference
    };

    auto to_string(BoundKind kind) -> std::string;

    struct BoundReport
    {
        std::string name;
        std::map<std::string, Rational> params;
        // Exact where the formula is rational; otherwise a 50-digit decimal
        // whose irrational factors are listed in `irrational`.
        std::variant<Rational, Decimal> value;
        BoundKind kind = BoundKind::reference;
        std::string irrational;
        bool asymptotic = false;
        std::string construction;

        auto is_exact() const -> bool { return std::holds_alternative<Rational>(value); }
        auto decimal() const -> Decimal;
    };

    // k!/(k^k - k), from balanced iterated blow-ups.
    auto pg_lower(int k) -> Rational;
    // sqrt(2 pi k) / e^k.
    auto pg_lower_stirling(int k) -> Decimal;

    // (2n/k) ((n-1)/(k-1))^(k-1), k >= 5, n >= k.
    auto cycle_count_upper(int n, int k) -> Rational;
    // 2e k!/k^k.
    auto cycle_ind_upper_pg(int k) -> Decimal;
    // 2 n^k / k^k, k >= 6, n >= k.
    auto kral_count_upper(int n, int k) -> Rational;
    // 2 k!/k^k with the o(1) term dropped.
    auto kral_ind_upper(int k) -> Rational;

    // 27 n^k / k^k and 27 k!/k^k, k >= 5.
    auto dlg_count_upper(int n, int k) -> Rational;
    auto dlg_ind_upper(int k) -> Rational;

    // C(2 rho, rho)/2^(2 rho) for K_{rho,rho}; C(2 rho + 1, rho)/2^(2 rho)
    // for K_{rho,rho+1}.
    auto bipartite_ind(int rho, bool odd) -> Rational;

    // (k+k')! k^k k'^k' / (k! k'! (k+k')^(k+k')) * i1 * i2.
    auto conj_disj_lower(int k, int k_prime, const Rational & i1, const Rational & i2) -> Rational;

    struct PathBounds
    {
        Rational lower;
        Rational upper;
    };

    // k!/((k+1)^(k-1) - 1) <= I(P_k) <= k!/(2 (k-1)^(k-1)).
    auto path_bounds(int k) -> PathBounds;

    // Throws LookupError for unknown names.
    auto known_inducibility(const std::string & name) -> BoundReport;
    auto known_inducibility_names() -> std::vector<std::string>;

    struct GapReport
    {
        int k = 0;
        std::string description;
        Rational numerator_bound;
        Rational denominator_bound;
        Rational ratio;
        std::string ratio_decimal;
        // The factor quoted alongside this comparison in the literature.
        std::string quoted_factor;
        bool matches_quoted = false;
    };

    // k = 5: 1 / dlg_ind_upper(5); k = 6: dlg_ind_upper(6) / (10/81);
    // k = 7: dlg_ind_upper(7) / pg_lower(7).
    auto gap_report(int k) -> GapReport;

    // Every registered bound evaluated over a range of k (and n where the
    // formula counts copies), in a stable order.
    auto bound_table(int k_lo, int k_hi, const std::vector<int> & ns) -> std::vector<BoundReport>;
}
