#pragma once

// Closed-form upper bounds on the rate of codes with (r,t)-availability.
//
// Rational formulas are evaluated exactly; formulas involving the binary
// entropy function or a non-integral logarithm or root are evaluated in
// 50-decimal-digit binary floating point (about 166 bits of precision).
//
// Registry:
//   tbf1          1 / prod_{j=1..t} (1 + 1/(j r))
//   tbf2          (t+1)^(-1/r), a relaxation of tbf1
//   wang_r2       (2r-1)/(2r+1) + 1/(n(2r+1)), t = 2
//   tb_2_3        8/15 + 1/n, the (2,3) specialisation of the product-form bound
//   wang_2_3      4/7 + 2/(7n), (2,3)
//   strong_local  r/(r+t), codes with (r+t, r, t+1) local codes
//   prakash_t2    r/(r+2), sequential recovery of two erasures
//   thm1          r/(r+2), exact covering with t = 2
//   thm2          3/7, exact covering with (r,t) = (2,3)
//   thm3_entropy  H2(1/(t+1)), exact covering with r = 2
//   thm4_simplex  log2(n+1)/n, (2,(n-1)/2) exact covering
//   cor3          (r-2)/(r+1) + 3/(r+1) H2(1/(r+2)), exact covering with t = 3
//   cor4          1 - 3/(r+1) + 3 log2(2r+4)/((r+1)(2r+3)), t = 3 and
//                 length (r+1)(2r+3)/3 (meaningful when 3 divides it)
//   bk1           1 - t/(r+1) + t/(r+1) / prod_{j=1..r+1} (1 + 1/(j(t-1)))
//   bk2           1 - 3(1+L1+L2)/((r+1)(3+L1+2L2)), t = 3, with m = 3n/(r+1),
//                 L1' = ceil((2r-1)m/(3(r+2)) - 1/(r+1) - 1),
//                 L2 = floor((m-3-L1')/2), L1 = m-3-2 L2

#include <array>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "lrc/error.hpp"

namespace lrc {

using Rational = boost::multiprecision::cpp_rational;
using Real = boost::multiprecision::cpp_bin_float_50;
using BigInt = boost::multiprecision::cpp_int;

struct BoundParams {
    std::optional<std::uint64_t> r;
    std::optional<std::uint64_t> t;
    std::optional<std::uint64_t> n;
};

enum class SweepVariable { r, t, n };

inline const char* to_string(SweepVariable v) {
    switch (v) {
        case SweepVariable::r: return "r";
        case SweepVariable::t: return "t";
        case SweepVariable::n: return "n";
    }
    return "?";
}

inline BoundParams with_param(BoundParams p, SweepVariable v, std::uint64_t value) {
    switch (v) {
        case SweepVariable::r: p.r = value; break;
        case SweepVariable::t: p.t = value; break;
        case SweepVariable::n: p.n = value; break;
    }
    return p;
}

inline Real to_real(const Rational& q) {
    return Real(boost::multiprecision::numerator(q)) / Real(boost::multiprecision::denominator(q));
}

class BoundValue {
public:
    BoundValue(std::string name, Rational exact, BoundParams params)
        : name_(std::move(name)), value_(std::move(exact)), params_(params) {}
    BoundValue(std::string name, Real approx, BoundParams params)
        : name_(std::move(name)), value_(std::move(approx)), params_(params) {}

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] const BoundParams& params() const noexcept { return params_; }
    [[nodiscard]] bool is_exact() const noexcept { return std::holds_alternative<Rational>(value_); }
    [[nodiscard]] const Rational& exact() const { return std::get<Rational>(value_); }

    [[nodiscard]] Real real() const {
        if (is_exact()) return to_real(exact());
        return std::get<Real>(value_);
    }

    /// Decimal with `digits` significant digits.
    [[nodiscard]] std::string decimal(int digits = 12) const {
        return real().str(digits, std::ios_base::fmtflags(0));
    }

    /// "p/q" when exact, otherwise a 30-digit decimal.
    [[nodiscard]] std::string text() const {
        if (!is_exact()) return decimal(30);
        const auto& q = exact();
        const auto den = boost::multiprecision::denominator(q);
        if (den == 1) return boost::multiprecision::numerator(q).str();
        return boost::multiprecision::numerator(q).str() + "/" + den.str();
    }

private:
    std::string name_;
    std::variant<Rational, Real> value_;
    BoundParams params_;
};

/// -1, 0, or 1. Exact when both sides are rational.
inline int compare(const BoundValue& a, const BoundValue& b) {
    if (a.is_exact() && b.is_exact()) return a.exact() < b.exact() ? -1 : (b.exact() < a.exact() ? 1 : 0);
    const Real x = a.real();
    const Real y = b.real();
    return x < y ? -1 : (y < x ? 1 : 0);
}

struct BoundInfo {
    std::string_view name;
    bool needs_r;
    bool needs_t;
    bool needs_n;
};

inline constexpr std::array<BoundInfo, 15> bound_registry{{
    {"tbf1", true, true, false},
    {"tbf2", true, true, false},
    {"wang_r2", true, false, true},
    {"tb_2_3", false, false, true},
    {"wang_2_3", false, false, true},
    {"strong_local", true, true, false},
    {"prakash_t2", true, false, false},
    {"thm1", true, false, false},
    {"thm2", false, false, false},
    {"thm3_entropy", false, true, false},
    {"thm4_simplex", false, false, true},
    {"cor3", true, false, false},
    {"cor4", true, false, false},
    {"bk1", true, true, false},
    {"bk2", true, false, true},
}};

inline const BoundInfo* find_bound(std::string_view name) {
    for (const auto& info : bound_registry) {
        if (info.name == name) return &info;
    }
    return nullptr;
}

namespace detail {

inline Real log2_real(const Real& x) { return boost::multiprecision::log(x) / boost::multiprecision::log(Real(2)); }

/// Binary entropy at a rational point.
inline Real binary_entropy(const Rational& p) {
    if (p <= 0 || p >= 1) return Real(0);
    const Real x = to_real(p);
    const Real y = Real(1) - x;
    return -x * log2_real(x) - y * log2_real(y);
}

/// log2(v) exactly when v is a power of two.
inline std::optional<std::uint64_t> exact_log2(std::uint64_t v) {
    if (v == 0 || (v & (v - 1)) != 0) return std::nullopt;
    std::uint64_t e = 0;
    while (v > 1) {
        v >>= 1;
        ++e;
    }
    return e;
}

/// floor(a / b) for b > 0.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && (a < 0)) q -= 1;
    return q;
}

inline BigInt floor_of(const Rational& q) {
    return floor_div(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

inline BigInt ceil_of(const Rational& q) { return -floor_of(-q); }

inline std::uint64_t need(const std::optional<std::uint64_t>& v, std::string_view bound, const char* what) {
    if (!v) throw Error(ErrorKind::missing_parameter, std::string(bound) + " needs " + what);
    return *v;
}

}  // namespace detail

/// Intermediate quantities of bk2.
struct Bk2Terms {
    BigInt m;
    BigInt l1_prime;
    BigInt l2;
    BigInt l1;
};

inline Bk2Terms bk2_terms(std::uint64_t r, std::uint64_t n) {
    if ((3 * n) % (r + 1) != 0) {
        throw Error(ErrorKind::invalid_parameter, "bk2 needs (r+1) to divide 3n");
    }
    Bk2Terms terms;
    terms.m = BigInt(3 * n / (r + 1));
    const Rational inner = Rational(BigInt(2 * r - 1) * terms.m, BigInt(3 * (r + 2))) - Rational(1, r + 1) - 1;
    terms.l1_prime = detail::ceil_of(inner);
    terms.l2 = detail::floor_of(Rational(terms.m - 3 - terms.l1_prime, 2));
    terms.l1 = terms.m - 3 - 2 * terms.l2;
    return terms;
}

inline BoundValue evaluate_bound(std::string_view name, const BoundParams& p) {
    const BoundInfo* info = find_bound(name);
    if (info == nullptr) throw Error(ErrorKind::unknown_name, "no bound named '" + std::string(name) + "'");
    const std::uint64_t r = info->needs_r ? detail::need(p.r, name, "r") : 0;
    const std::uint64_t t = info->needs_t ? detail::need(p.t, name, "t") : 0;
    const std::uint64_t n = info->needs_n ? detail::need(p.n, name, "n") : 0;
    if (info->needs_r && r < 1) throw Error(ErrorKind::invalid_parameter, "r must be at least 1");
    if (info->needs_t && t < 1) throw Error(ErrorKind::invalid_parameter, "t must be at least 1");
    if (info->needs_n && n < 1) throw Error(ErrorKind::invalid_parameter, "n must be at least 1");
    if (info->needs_n && info->needs_r && n < r + 1) throw Error(ErrorKind::invalid_parameter, "n must be at least r+1");

    const std::string id(name);
    auto check = [&](BoundValue v) {
        const bool positive = v.is_exact() ? v.exact() > 0 : v.real() > 0;
        const bool at_most_one = v.is_exact() ? v.exact() <= 1 : v.real() <= 1;
        if (!positive || !at_most_one) {
            throw Error(ErrorKind::invalid_parameter, id + " is outside (0,1] at these parameters");
        }
        return v;
    };
    auto exact = [&](Rational q) { return check(BoundValue(id, std::move(q), p)); };
    auto approx = [&](Real x) { return check(BoundValue(id, std::move(x), p)); };

    if (name == "tbf1") {
        Rational prod = 1;
        for (std::uint64_t j = 1; j <= t; ++j) prod *= Rational(1) + Rational(1, j * r);
        return exact(1 / prod);
    }
    if (name == "tbf2") {
        // exact when t+1 is a perfect r-th power
        for (std::uint64_t a = 1;; ++a) {
            BigInt pow = 1;
            for (std::uint64_t i = 0; i < r && pow <= t + 1; ++i) pow *= a;
            if (pow == t + 1) return exact(Rational(1, a));
            if (pow > t + 1) break;
        }
        return approx(boost::multiprecision::pow(Real(t + 1), -Real(1) / Real(r)));
    }
    if (name == "wang_r2") return exact(Rational(2 * r - 1, 2 * r + 1) + Rational(1, n * (2 * r + 1)));
    if (name == "tb_2_3") return exact(Rational(8, 15) + Rational(1, n));
    if (name == "wang_2_3") return exact(Rational(4, 7) + Rational(2, 7 * n));
    if (name == "strong_local") return exact(Rational(r, r + t));
    if (name == "prakash_t2" || name == "thm1") return exact(Rational(r, r + 2));
    if (name == "thm2") return exact(Rational(3, 7));
    if (name == "thm3_entropy") {
        if (t == 1) return exact(Rational(1));
        return approx(detail::binary_entropy(Rational(1, t + 1)));
    }
    if (name == "thm4_simplex") {
        if (auto e = detail::exact_log2(n + 1)) return exact(Rational(*e, n));
        return approx(detail::log2_real(Real(n + 1)) / Real(n));
    }
    if (name == "cor3") {
        return approx(to_real(Rational(BigInt(r) - 2, r + 1)) +
                      Real(3) / Real(r + 1) * detail::binary_entropy(Rational(1, r + 2)));
    }
    if (name == "cor4") {
        const Rational base = 1 - Rational(3, r + 1);
        const std::uint64_t denom = (r + 1) * (2 * r + 3);
        if (auto e = detail::exact_log2(2 * r + 4)) return exact(base + Rational(3 * *e, denom));
        return approx(to_real(base) + Real(3) * detail::log2_real(Real(2 * r + 4)) / Real(denom));
    }
    if (name == "bk1") {
        if (t < 2) throw Error(ErrorKind::invalid_parameter, "bk1 needs t >= 2");
        Rational prod = 1;
        for (std::uint64_t j = 1; j <= r + 1; ++j) prod *= Rational(1) + Rational(1, j * (t - 1));
        const Rational share(t, r + 1);
        return exact(1 - share + share / prod);
    }
    if (name == "bk2") {
        const auto terms = bk2_terms(r, n);
        const BigInt denom = BigInt(r + 1) * (3 + terms.l1 + 2 * terms.l2);
        if (denom <= 0) throw Error(ErrorKind::invalid_parameter, "bk2 is undefined for such small n");
        return exact(1 - Rational(3 * (1 + terms.l1 + terms.l2), denom));
    }
    throw Error(ErrorKind::unknown_name, "no bound named '" + id + "'");
}

struct BoundRow {
    std::uint64_t param = 0;
    std::vector<BoundValue> values;  // in the table's name order
};

struct BoundTable {
    SweepVariable variable = SweepVariable::t;
    std::vector<std::string> names;
    std::vector<BoundRow> rows;

    /// "param,<name1>,..." then one line per row, 12 significant digits.
    void write_csv(std::ostream& out) const {
        out << "param";
        for (const auto& n : names) out << ',' << n;
        out << '\n';
        for (const auto& row : rows) {
            out << row.param;
            for (const auto& v : row.values) out << ',' << v.decimal(12);
            out << '\n';
        }
    }
};

/// One row per integer value of `variable` in [lo, hi]; empty when lo > hi.
inline BoundTable sweep(const std::vector<std::string>& names, SweepVariable variable, std::uint64_t lo,
                        std::uint64_t hi, const BoundParams& fixed) {
    BoundTable table{variable, names, {}};
    for (std::uint64_t x = lo; x <= hi && lo <= hi; ++x) {
        const auto p = with_param(fixed, variable, x);
        BoundRow row{x, {}};
        for (const auto& name : names) row.values.push_back(evaluate_bound(name, p));
        table.rows.push_back(std::move(row));
        if (x == hi) break;
    }
    return table;
}

/// Smallest value of `variable` in [lo, hi] at which bound a is strictly
/// below bound b.
inline std::optional<std::uint64_t> find_crossing(std::string_view a, std::string_view b, SweepVariable variable,
                                                  std::uint64_t lo, std::uint64_t hi, const BoundParams& fixed) {
    for (std::uint64_t x = lo; x <= hi && lo <= hi; ++x) {
        const auto p = with_param(fixed, variable, x);
        if (compare(evaluate_bound(a, p), evaluate_bound(b, p)) < 0) return x;
        if (x == hi) break;
    }
    return std::nullopt;
}

}  // namespace lrc
