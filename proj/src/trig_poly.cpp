#include "nsverify/trig_poly.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace nsv {

int FreqKey::leading_sign() const {
    for (int v : k)
        if (v != 0) return v > 0 ? 1 : -1;
    for (int v : m)
        if (v != 0) return v > 0 ? 1 : -1;
    return 0;
}

Angle operator+(Angle x, const Angle& y) {
    for (int i = 0; i < 3; ++i) {
        x.key.k[i] += y.key.k[i];
        x.key.m[i] += y.key.m[i];
    }
    return x;
}

Angle operator-(Angle x, const Angle& y) { return x + (-y); }

Angle ax(int mult, int axis) {
    if (axis < 1 || axis > 3) throw std::invalid_argument("ax: axis out of range");
    Angle a;
    a.key.k[axis - 1] = mult;
    return a;
}

Angle xi(int j) {
    if (j < 1 || j > 3) throw std::invalid_argument("xi: index out of range");
    Angle a;
    a.key.m[j - 1] = 1;
    return a;
}

PhaseTriple PhaseTriple::of_pi_fractions(const std::array<std::pair<long, long>, 3>& fractions) {
    PhaseTriple p;
    for (int j = 0; j < 3; ++j) {
        auto [num, den] = fractions[j];
        if (den == 0) throw std::invalid_argument("PhaseTriple: zero denominator");
        // angle = (num/den) pi = (6 num / den) * pi/6
        long n6 = 6 * num;
        if (n6 % den != 0)
            throw std::invalid_argument("PhaseTriple: angle " + std::to_string(num) + "/" +
                                        std::to_string(den) + " pi is not a multiple of pi/6");
        p.sixths[j] = n6 / den;
    }
    return p;
}

std::array<double, 3> PhaseTriple::to_radians() const {
    const double pi6 = M_PI / 6.0;
    return {sixths[0] * pi6, sixths[1] * pi6, sixths[2] * pi6};
}

std::string PhaseTriple::str() const {
    std::ostringstream os;
    os << "(";
    for (int j = 0; j < 3; ++j) {
        long n = sixths[j];
        if (j) os << ", ";
        if (n == 0) {
            os << "0";
            continue;
        }
        long g = std::gcd(std::abs(n), 6L);
        long num = n / g, den = 6 / g;
        if (num == 1)
            os << "pi";
        else if (num == -1)
            os << "-pi";
        else
            os << num << "pi";
        if (den != 1) os << "/" << den;
    }
    os << ")";
    return os.str();
}

void TrigPoly::add_term(const FreqKey& key, int alpha_power, const Coeff& ccos,
                        const Coeff& csin) {
    FreqKey k = key;
    Coeff cc = ccos, cs = csin;
    if (k.leading_sign() < 0) {
        k = k.negated();
        cs = -cs;
    }
    if (k.is_zero()) cs = Coeff(0);  // sin(0) contributes nothing
    if (cc.is_zero() && cs.is_zero()) return;

    auto it = terms_.find({k, alpha_power});
    if (it == terms_.end()) {
        terms_.emplace(TermKey{k, alpha_power}, Term{cc, cs});
        return;
    }
    it->second.ccos += cc;
    it->second.csin += cs;
    if (it->second.is_zero()) terms_.erase(it);
}

TrigPoly TrigPoly::constant(Coeff c, int alpha_power) {
    TrigPoly p;
    p.add_term(FreqKey{}, alpha_power, c, Coeff(0));
    return p;
}

TrigPoly TrigPoly::cosine(const Angle& a, Coeff c, int alpha_power) {
    TrigPoly p;
    p.add_term(a.key, alpha_power, c, Coeff(0));
    return p;
}

TrigPoly TrigPoly::sine(const Angle& a, Coeff c, int alpha_power) {
    TrigPoly p;
    p.add_term(a.key, alpha_power, Coeff(0), c);
    return p;
}

TrigPoly TrigPoly::operator-() const {
    TrigPoly r;
    for (const auto& [tk, t] : terms_) r.terms_.emplace(tk, Term{-t.ccos, -t.csin});
    return r;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
    for (const auto& [tk, t] : o.terms_) add_term(tk.key, tk.alpha_power, t.ccos, t.csin);
    return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& o) {
    for (const auto& [tk, t] : o.terms_) add_term(tk.key, tk.alpha_power, -t.ccos, -t.csin);
    return *this;
}

TrigPoly operator*(const TrigPoly& x, const TrigPoly& y) {
    // Product-to-sum on every term pair:
    //   cos A cos B = (cos(A-B) + cos(A+B))/2      sin A sin B = (cos(A-B) - cos(A+B))/2
    //   sin A cos B = (sin(A+B) + sin(A-B))/2      cos A sin B = (sin(A+B) - sin(A-B))/2
    static const Coeff half = Coeff::rat(1, 2);
    TrigPoly r;
    for (const auto& [tk1, t1] : x.terms_) {
        for (const auto& [tk2, t2] : y.terms_) {
            FreqKey sum, diff;
            for (int i = 0; i < 3; ++i) {
                sum.k[i] = tk1.key.k[i] + tk2.key.k[i];
                sum.m[i] = tk1.key.m[i] + tk2.key.m[i];
                diff.k[i] = tk1.key.k[i] - tk2.key.k[i];
                diff.m[i] = tk1.key.m[i] - tk2.key.m[i];
            }
            int p = tk1.alpha_power + tk2.alpha_power;
            Coeff cc = t1.ccos * t2.ccos, ss = t1.csin * t2.csin;
            Coeff sc = t1.csin * t2.ccos, cs = t1.ccos * t2.csin;
            r.add_term(diff, p, half * (cc + ss), half * (sc - cs));
            r.add_term(sum, p, half * (cc - ss), half * (sc + cs));
        }
    }
    return r;
}

TrigPoly TrigPoly::scaled(const Coeff& c) const {
    TrigPoly r;
    if (c.is_zero()) return r;
    for (const auto& [tk, t] : terms_) r.terms_.emplace(tk, Term{c * t.ccos, c * t.csin});
    return r;
}

TrigPoly TrigPoly::alpha_scaled(int p) const {
    TrigPoly r;
    for (const auto& [tk, t] : terms_) r.terms_.emplace(TermKey{tk.key, tk.alpha_power + p}, t);
    return r;
}

bool operator==(const TrigPoly& x, const TrigPoly& y) {
    if (x.terms_.size() != y.terms_.size()) return false;
    auto it = y.terms_.begin();
    for (const auto& [tk, t] : x.terms_) {
        if (tk != it->first || t.ccos != it->second.ccos || t.csin != it->second.csin)
            return false;
        ++it;
    }
    return true;
}

TrigPoly TrigPoly::diff(int axis) const {
    if (axis < 1 || axis > 3) throw std::invalid_argument("diff: axis out of range");
    TrigPoly r;
    for (const auto& [tk, t] : terms_) {
        long ka = tk.key.k[axis - 1];
        if (ka == 0) continue;
        // d/dx (cc cos + cs sin)(theta) = k alpha (cs cos - cc sin)(theta)
        Coeff f = Coeff::rat(ka);
        r.add_term(tk.key, tk.alpha_power + 1, f * t.csin, -(f * t.ccos));
    }
    return r;
}

TrigPoly TrigPoly::laplacian() const {
    TrigPoly r;
    for (const auto& [tk, t] : terms_) {
        long k2 = tk.key.k_norm2();
        if (k2 == 0) continue;
        Coeff f = Coeff::rat(-k2);
        r.add_term(tk.key, tk.alpha_power + 2, f * t.ccos, f * t.csin);
    }
    return r;
}

TrigPoly TrigPoly::subst_phases(const PhaseTriple& phases) const {
    TrigPoly r;
    for (const auto& [tk, t] : terms_) {
        long n = 0;
        for (int j = 0; j < 3; ++j) n += tk.key.m[j] * phases.sixths[j];
        Coeff c = cos_pi6(n), s = sin_pi6(n);
        FreqKey spatial{tk.key.k, {0, 0, 0}};
        // cos(S+phi) = cos phi cos S - sin phi sin S, likewise for sin
        r.add_term(spatial, tk.alpha_power, t.ccos * c + t.csin * s,
                   t.csin * c - t.ccos * s);
    }
    return r;
}

double TrigPoly::eval(const std::array<double, 3>& x, double alpha,
                      const std::array<double, 3>& phases) const {
    double acc = 0.0;
    for (const auto& [tk, t] : terms_) {
        double theta = 0.0;
        for (int i = 0; i < 3; ++i)
            theta += alpha * tk.key.k[i] * x[i] + tk.key.m[i] * phases[i];
        double w = std::pow(alpha, tk.alpha_power);
        acc += w * (t.ccos.to_double() * std::cos(theta) + t.csin.to_double() * std::sin(theta));
    }
    return acc;
}

std::map<int, Coeff> TrigPoly::constant_mode() const {
    std::map<int, Coeff> r;
    for (const auto& [tk, t] : terms_)
        if (tk.key.is_zero()) r.emplace(tk.alpha_power, t.ccos);
    return r;
}

Coeff TrigPoly::constant_coeff(int alpha_power) const {
    auto it = terms_.find({FreqKey{}, alpha_power});
    return it == terms_.end() ? Coeff(0) : it->second.ccos;
}

bool TrigPoly::has_zero_k_term() const {
    for (const auto& [tk, t] : terms_) {
        (void)t;
        if (tk.key.k == std::array<int, 3>{0, 0, 0}) return true;
    }
    return false;
}

std::optional<long> TrigPoly::uniform_k_norm2() const {
    std::optional<long> k2;
    for (const auto& [tk, t] : terms_) {
        (void)t;
        long v = tk.key.k_norm2();
        if (!k2)
            k2 = v;
        else if (*k2 != v)
            return std::nullopt;
    }
    return k2;
}

nlohmann::json TrigPoly::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [tk, t] : terms_) {
        arr.push_back({{"k", tk.key.k},
                       {"m", tk.key.m},
                       {"alpha_power", tk.alpha_power},
                       {"cos", t.ccos.str()},
                       {"sin", t.csin.str()}});
    }
    return arr;
}

TrigPoly divergence(const VectorField& v) {
    return v[0].diff(1) + v[1].diff(2) + v[2].diff(3);
}

VectorField curl(const VectorField& v) {
    return {v[2].diff(2) - v[1].diff(3),  //
            v[0].diff(3) - v[2].diff(1),  //
            v[1].diff(1) - v[0].diff(2)};
}

std::map<int, Coeff> mean_square(const TrigPoly& f) { return (f * f).constant_mode(); }

double mean_square_value(const TrigPoly& f, double alpha) {
    double acc = 0.0;
    for (const auto& [p, c] : mean_square(f)) acc += std::pow(alpha, p) * c.to_double();
    return acc;
}

namespace {

TrigPoly zero_k_part(const TrigPoly& g) {
    TrigPoly r;
    for (const auto& [tk, t] : g.terms())
        if (tk.key.k == std::array<int, 3>{0, 0, 0})
            r += TrigPoly::cosine(Angle{tk.key}, t.ccos, tk.alpha_power) +
                 TrigPoly::sine(Angle{tk.key}, t.csin, tk.alpha_power);
    return r;
}

}  // namespace

TrigPoly potential(const VectorField& g) {
    for (int i = 0; i < 3; ++i) {
        if (g[i].has_zero_k_term())
            throw PotentialError("potential: component " + std::to_string(i + 1) +
                                     " has a k = 0 term, no periodic potential exists",
                                 zero_k_part(g[i]));
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            TrigPoly c = g[j].diff(i + 1) - g[i].diff(j + 1);
            if (!c.is_zero())
                throw PotentialError("potential: field is not curl-free (d" +
                                         std::to_string(i + 1) + " g" + std::to_string(j + 1) +
                                         " - d" + std::to_string(j + 1) + " g" +
                                         std::to_string(i + 1) + " != 0)",
                                     c);
        }
    }

    // Union of term keys, then antidifferentiate along the first axis with
    // k_j != 0 using that component's term.
    std::set<TrigPoly::TermKey> keys;
    for (const auto& gi : g)
        for (const auto& [tk, t] : gi.terms()) {
            (void)t;
            keys.insert(tk);
        }

    TrigPoly phi;
    for (const auto& tk : keys) {
        int j = 0;
        while (tk.key.k[j] == 0) ++j;
        auto it = g[j].terms().find(tk);
        if (it == g[j].terms().end()) continue;
        const auto& t = it->second;
        // integral of (cc cos + cs sin)(theta) dx_j = (cc sin - cs cos)(theta)/(k_j alpha)
        Coeff inv = Coeff::rat(1, tk.key.k[j]);
        phi += TrigPoly::cosine(Angle{tk.key}, -(inv * t.csin), tk.alpha_power - 1) +
               TrigPoly::sine(Angle{tk.key}, inv * t.ccos, tk.alpha_power - 1);
    }

    for (int i = 0; i < 3; ++i)
        if (phi.diff(i + 1) != g[i])
            throw std::logic_error("potential: reconstruction failed on curl-free input");
    return phi;
}

RealTrigPoly::RealTrigPoly(const TrigPoly& p, double alpha) : alpha_(alpha) {
    std::map<std::array<int, 3>, std::pair<double, double>> acc;
    for (const auto& [tk, t] : p.terms()) {
        if (tk.key.m != std::array<int, 3>{0, 0, 0})
            throw std::invalid_argument("RealTrigPoly: phase frequencies not substituted");
        double w = std::pow(alpha, tk.alpha_power);
        auto& [cc, cs] = acc[tk.key.k];
        cc += w * t.ccos.to_double();
        cs += w * t.csin.to_double();
    }
    terms_.reserve(acc.size());
    for (const auto& [k, c] : acc) terms_.push_back({k, c.first, c.second});
}

double RealTrigPoly::eval(const std::array<double, 3>& x) const {
    double acc = 0.0;
    for (const auto& t : terms_) {
        double theta = alpha_ * (t.k[0] * x[0] + t.k[1] * x[1] + t.k[2] * x[2]);
        acc += t.ccos * std::cos(theta) + t.csin * std::sin(theta);
    }
    return acc;
}

RealTrigPoly RealTrigPoly::scaled(double s) const {
    RealTrigPoly r = *this;
    for (auto& t : r.terms_) {
        t.ccos *= s;
        t.csin *= s;
    }
    return r;
}

double RealTrigPoly::max_coeff_diff(const RealTrigPoly& o) const {
    double m = 0.0;
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j >= o.terms_.size() || (i < terms_.size() && terms_[i].k < o.terms_[j].k)) {
            m = std::max({m, std::abs(terms_[i].ccos), std::abs(terms_[i].csin)});
            ++i;
        } else if (i >= terms_.size() || o.terms_[j].k < terms_[i].k) {
            m = std::max({m, std::abs(o.terms_[j].ccos), std::abs(o.terms_[j].csin)});
            ++j;
        } else {
            m = std::max({m, std::abs(terms_[i].ccos - o.terms_[j].ccos),
                          std::abs(terms_[i].csin - o.terms_[j].csin)});
            ++i;
            ++j;
        }
    }
    return m;
}

RealTrigPoly heat_propagate(const TrigPoly& p, double t, double kappa, double alpha) {
    RealTrigPoly r(p, alpha);
    for (auto& term : r.terms_) {
        long k2 = long(term.k[0]) * term.k[0] + long(term.k[1]) * term.k[1] +
                  long(term.k[2]) * term.k[2];
        double damp = std::exp(-kappa * alpha * alpha * double(k2) * t);
        term.ccos *= damp;
        term.csin *= damp;
    }
    return r;
}

}  // namespace nsv
