#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "nsverify/coeff.hpp"

namespace nsv {

/// Integer frequency vector of one trigonometric argument
///   k . (alpha x) + m . xi
/// with k the spatial frequencies (units of alpha per axis) and m the phase
/// frequencies (units of xi_j). Keys are kept sign-canonical: the first
/// nonzero entry of the concatenation (k, m) is positive.
struct FreqKey {
    std::array<int, 3> k{0, 0, 0};
    std::array<int, 3> m{0, 0, 0};

    auto operator<=>(const FreqKey&) const = default;

    bool is_zero() const { return *this == FreqKey{}; }
    long k_norm2() const {
        return long(k[0]) * k[0] + long(k[1]) * k[1] + long(k[2]) * k[2];
    }
    FreqKey negated() const {
        return {{-k[0], -k[1], -k[2]}, {-m[0], -m[1], -m[2]}};
    }
    /// Sign of the first nonzero entry of (k, m); 0 for the zero key.
    int leading_sign() const;
};

/// Argument builder so flow constructors read like the printed formulas:
///   ax(2, 1) + xi(2) + xi(1)  ==  2*alpha*x1 + xi2 + xi1
struct Angle {
    FreqKey key;
    friend Angle operator+(Angle x, const Angle& y);
    friend Angle operator-(Angle x, const Angle& y);
    Angle operator-() const { return {key.negated()}; }
};
Angle ax(int mult, int axis);  // mult * alpha * x_axis, axis in 1..3
Angle xi(int j);               // xi_j, j in 1..3

/// Exact triple of phase angles, each an integer multiple of pi/6.
struct PhaseTriple {
    std::array<long, 3> sixths{0, 0, 0};  // angle_j = sixths[j] * pi/6

    static PhaseTriple of_sixths(long n1, long n2, long n3) { return {{n1, n2, n3}}; }
    /// angle_j = (num_j/den_j) * pi; throws std::invalid_argument unless
    /// every angle reduces to a multiple of pi/6.
    static PhaseTriple of_pi_fractions(const std::array<std::pair<long, long>, 3>& fractions);

    std::array<double, 3> to_radians() const;
    std::string str() const;  // e.g. "(-pi/3, pi/3, pi/2)"
    auto operator<=>(const PhaseTriple&) const = default;
};

/// Canonical multivariate trigonometric polynomial: a finite sum of terms
///
///   (c_cos * cos + c_sin * sin)(k . alpha x + m . xi) * alpha^p
///
/// with exact Coeff coefficients, sign-canonical keys, no zero terms stored,
/// and no sin stored on the zero key. Two TrigPoly are equal as functions
/// iff their term maps compare equal. alpha stays symbolic through the
/// per-term power p; it only becomes a number in eval().
class TrigPoly {
public:
    struct TermKey {
        FreqKey key;
        int alpha_power = 0;
        auto operator<=>(const TermKey&) const = default;
    };
    struct Term {
        Coeff ccos, csin;
        bool is_zero() const { return ccos.is_zero() && csin.is_zero(); }
    };
    using TermMap = std::map<TermKey, Term>;

    TrigPoly() = default;

    static TrigPoly constant(Coeff c, int alpha_power = 0);
    static TrigPoly cosine(const Angle& a, Coeff c = Coeff(1), int alpha_power = 0);
    static TrigPoly sine(const Angle& a, Coeff c = Coeff(1), int alpha_power = 0);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    TrigPoly operator-() const;
    TrigPoly& operator+=(const TrigPoly& o);
    TrigPoly& operator-=(const TrigPoly& o);
    friend TrigPoly operator+(TrigPoly x, const TrigPoly& y) { return x += y; }
    friend TrigPoly operator-(TrigPoly x, const TrigPoly& y) { return x -= y; }
    friend TrigPoly operator*(const TrigPoly& x, const TrigPoly& y);

    TrigPoly scaled(const Coeff& c) const;
    friend TrigPoly operator*(const Coeff& c, const TrigPoly& p) { return p.scaled(c); }
    /// Multiply by alpha^p (shifts every term's grading).
    TrigPoly alpha_scaled(int p) const;

    friend bool operator==(const TrigPoly& x, const TrigPoly& y);
    friend bool operator!=(const TrigPoly& x, const TrigPoly& y) { return !(x == y); }

    /// Exact d/dx_axis, axis in 1..3. Multiplies by k_axis * alpha termwise.
    TrigPoly diff(int axis) const;
    TrigPoly laplacian() const;

    /// Substitute exact phase angles: eliminates all m-frequencies; the
    /// result has m = 0 on every key and coefficients still in Q(√3).
    TrigPoly subst_phases(const PhaseTriple& phases) const;

    /// Floating-point evaluation at x with numeric alpha and (residual)
    /// numeric phases xi.
    double eval(const std::array<double, 3>& x, double alpha,
                const std::array<double, 3>& phases = {0.0, 0.0, 0.0}) const;

    /// Cell mean: coefficients of the all-zero key, one per alpha grade.
    std::map<int, Coeff> constant_mode() const;
    /// Convenience for the single-grade case; zero Coeff when absent.
    Coeff constant_coeff(int alpha_power = 0) const;
    /// True if some term has k = 0 (constant or pure-phase content).
    bool has_zero_k_term() const;

    /// If every term shares one |k|^2, returns it (eigenfunctions of the
    /// Laplacian: Δf = -|k|^2 alpha^2 f). Zero polynomial has no value.
    std::optional<long> uniform_k_norm2() const;

    /// Canonical JSON list of {k, m, alpha_power, cos, sin}, sorted by key.
    nlohmann::json to_json() const;

private:
    void add_term(const FreqKey& key, int alpha_power, const Coeff& ccos, const Coeff& csin);

    TermMap terms_;
};

using VectorField = std::array<TrigPoly, 3>;

TrigPoly divergence(const VectorField& v);
VectorField curl(const VectorField& v);
/// Exact mean of f^2 over the periodic cell, per alpha grade.
std::map<int, Coeff> mean_square(const TrigPoly& f);
/// Numeric mean of |v|^2 over the cell for a given alpha.
double mean_square_value(const TrigPoly& f, double alpha);

/// Thrown by potential() when no periodic single-valued potential exists.
struct PotentialError : std::runtime_error {
    PotentialError(std::string msg, TrigPoly w)
        : std::runtime_error(std::move(msg)), witness(std::move(w)) {}
    TrigPoly witness;  // nonzero curl component, or the offending k = 0 part
};

/// Exact periodic potential phi with grad phi = g and zero mean.
/// Requires g curl-free with no k = 0 terms; throws PotentialError otherwise
/// (curl failures carry the first nonzero d_i g_j - d_j g_i as witness).
TrigPoly potential(const VectorField& g);

/// Trigonometric polynomial with double coefficients on spatial keys only:
/// the numeric bridge between the exact layer and grid evaluation. alpha^p
/// gradings are folded into the coefficients at construction.
class RealTrigPoly {
public:
    struct Term {
        std::array<int, 3> k;
        double ccos, csin;
    };

    RealTrigPoly() = default;
    /// Requires m = 0 on every key (phases already substituted).
    RealTrigPoly(const TrigPoly& p, double alpha);

    const std::vector<Term>& terms() const { return terms_; }
    double alpha() const { return alpha_; }

    double eval(const std::array<double, 3>& x) const;
    RealTrigPoly scaled(double s) const;
    /// max |coefficient difference| against another spectrum.
    double max_coeff_diff(const RealTrigPoly& o) const;

private:
    friend RealTrigPoly heat_propagate(const TrigPoly&, double, double, double);
    std::vector<Term> terms_;  // sorted by k
    double alpha_ = 1.0;
};

/// Mode-wise heat propagation: each spatial mode k is damped by
/// exp(-kappa alpha^2 |k|^2 t). Requires m = 0 on every key.
RealTrigPoly heat_propagate(const TrigPoly& p, double t, double kappa, double alpha);

}  // namespace nsv
