#include "chow/regulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "chow/errors.hpp"

namespace chow {

namespace {

using cplx = std::complex<double>;

constexpr double kPi = std::numbers::pi;
constexpr double kLattice = 4.0 * kPi * kPi;
constexpr double kQuadTol = 1e-10;
constexpr int kMaxDepth = 48;

// Branch of log with the cut rotated to the ray arg = pi + theta.
cplx log_cut(cplx w, double theta) {
    return cplx(0.0, theta) + std::log(w * std::polar(1.0, -theta));
}

struct EmbeddedFactor {
    cplx root;
    int exp;
};

// A factored rational function pushed through one complex embedding.
struct EmbeddedRational {
    cplx unit;
    std::vector<EmbeddedFactor> factors;

    cplx eval(cplx x) const {
        cplx v = unit;
        for (const auto& f : factors) {
            cplx b = x - f.root;
            v *= std::pow(b, f.exp);
        }
        return v;
    }
    cplx dlog(cplx x) const {
        cplx v = 0.0;
        for (const auto& f : factors) v += double(f.exp) / (x - f.root);
        return v;
    }
    bool constant() const { return factors.empty(); }
};

EmbeddedRational embed_rational(const FactoredRational& f, unsigned k) {
    EmbeddedRational r;
    r.unit = f.unit().embed(k);
    for (const auto& [root, e] : f.factors()) r.factors.push_back({root.embed(k), e});
    return r;
}

// Fractional-linear map with complex coefficients.
struct CMobius {
    cplx a, b, c, d;
    cplx apply(cplx w) const { return (a * w + b) / (c * w + d); }
    cplx apply_inverse(cplx w) const { return (d * w - b) / (-c * w + a); }
    // derivative of the inverse map at w
    cplx inverse_derivative(cplx w) const {
        cplx den = -c * w + a;
        return (a * d - b * c) / (den * den);
    }
};

CMobius embed_mobius(const Mobius& m, unsigned k) {
    return {m.a().embed(k), m.b().embed(k), m.c().embed(k), m.d().embed(k)};
}

// The arc f1^{-1}(e^{i theta} R^-) parametrized by t in (0,1).
struct Arc {
    CMobius m;  // f1 as a Mobius map
    double theta;

    cplx ray(double t) const { return std::polar(1.0, theta) * cplx(-t / (1.0 - t), 0.0); }
    cplx x(double t) const { return m.apply_inverse(ray(t)); }
    cplx dx(double t) const {
        double s = 1.0 - t;
        cplx dw = std::polar(1.0, theta) * cplx(-1.0 / (s * s), 0.0);
        return m.inverse_derivative(ray(t)) * dw;
    }
    // Parameter value whose arc point maps to w under f1, if w lies on the ray.
    std::optional<double> param_of(cplx w) const {
        cplx u = w * std::polar(1.0, -theta);
        if (std::abs(u.imag()) > 1e-11 * (1.0 + std::abs(u.real())) || u.real() > -1e-11)
            return std::nullopt;
        double v = u.real();
        return v / (v - 1.0);
    }
};

struct Quadrature {
    double error = 0.0;
    int evaluations = 0;
};

template <class F>
cplx adaptive_simpson(const F& f, double a, double b, cplx fa, cplx fm, cplx fb, double tol,
                      int depth, Quadrature& q) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    cplx flm = f(lm), frm = f(rm);
    q.evaluations += 2;
    cplx whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    cplx left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    cplx right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    cplx delta = left + right - whole;
    if (depth >= kMaxDepth || std::abs(delta) <= 15.0 * tol) {
        q.error += std::abs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    return adaptive_simpson(f, a, m, fa, flm, fm, tol * 0.5, depth + 1, q) +
           adaptive_simpson(f, m, b, fm, frm, fb, tol * 0.5, depth + 1, q);
}

// Integrates f over (a, b) with endpoint-softening substitution
// t = a + (b-a) sin^2(pi u / 2).
template <class F>
cplx integrate_segment(const F& f, double a, double b, Quadrature& q) {
    auto g = [&](double u) {
        double s = std::sin(0.5 * kPi * u);
        double t = a + (b - a) * s * s;
        double dt = (b - a) * 0.5 * kPi * std::sin(kPi * u);
        return f(t) * dt;
    };
    double lo = 1e-7, hi = 1.0 - 1e-7;
    cplx fa = g(lo), fm = g(0.5), fb = g(hi);
    q.evaluations += 3;
    return adaptive_simpson(g, lo, hi, fa, fm, fb, kQuadTol, 0, q);
}

double reduce_real(double x) {
    double r = std::fmod(x, kLattice);
    if (r < 0) r += kLattice;
    return r;
}

// One crossing of f2 through the rotated cut along the arc.
struct Crossing {
    double t;
    int direction;  // sign of d/dt Im(f2 e^{-i theta})
};

class DegeneratePosition {};  // internal signal, converted to the public error

// Locates the isolated parameters where f2(x(t)) lies on the cut ray.
std::vector<Crossing> find_crossings(const Arc& arc, const EmbeddedRational& f2,
                                     const std::vector<double>& grid) {
    std::vector<Crossing> out;
    auto rot = std::polar(1.0, -arc.theta);
    auto val = [&](double t) { return f2.eval(arc.x(t)) * rot; };
    int flat_run = 0;
    for (size_t i = 0; i + 1 < grid.size(); ++i) {
        cplx v0 = val(grid[i]), v1 = val(grid[i + 1]);
        double i0 = v0.imag(), i1 = v1.imag();
        if (std::abs(i0) < 1e-12 && v0.real() < -1e-12) {
            if (++flat_run >= 8) throw DegeneratePosition{};
            continue;
        }
        flat_run = 0;
        if (i0 == 0.0 || i1 == 0.0 || (i0 < 0) == (i1 < 0)) continue;
        double lo = grid[i], hi = grid[i + 1];
        for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
            double mid = 0.5 * (lo + hi);
            double im = val(mid).imag();
            if (im == 0.0) { lo = hi = mid; break; }
            if ((im < 0) == (i0 < 0)) lo = mid; else hi = mid;
        }
        double t = 0.5 * (lo + hi);
        cplx v = val(t);
        if (v.real() >= -1e-12) continue;  // crossed the positive axis instead
        out.push_back({t, i1 > i0 ? 1 : -1});
    }
    return out;
}

cplx aj_term_raw(const CurveTerm& term, unsigned k, double theta, double& err_out) {
    const FactoredRational& f1 = term.coord(0);
    if (f1.is_constant()) {
        cplx c = f1.unit().embed(k) * std::polar(1.0, -theta);
        if (std::abs(c.imag()) < 1e-11 && c.real() <= 1e-11) throw DegeneratePosition{};
        err_out = 0.0;
        return 0.0;
    }
    auto mob = f1.to_mobius();
    if (!mob)
        throw unsupported_shape_error(
            "regulator needs a constant or fractional-linear first coordinate: " + f1.str());

    Arc arc{embed_mobius(*mob, k), theta};
    EmbeddedRational f2 = embed_rational(term.coord(1), k);
    EmbeddedRational f3 = embed_rational(term.coord(2), k);

    // Split the integration at interior zeros and poles of f2, and refuse
    // interior zeros and poles of f3 (the integrand would not be integrable).
    std::vector<double> splits{0.0, 1.0};
    auto add_interior = [&](const EmbeddedRational& g, bool reject) {
        for (const auto& f : g.factors) {
            // f1 value at the root of g tells whether the root sits on the arc
            cplx den = arc.m.c * f.root + arc.m.d;
            if (std::abs(den) < 1e-14) continue;  // maps to infinity, off the arc
            cplx w = (arc.m.a * f.root + arc.m.b) / den;
            auto t = arc.param_of(w);
            if (!t || *t <= 1e-9 || *t >= 1.0 - 1e-9) continue;
            if (reject)
                throw degenerate_position_error(
                    "zero or pole of the last coordinate lies on the integration arc");
            splits.push_back(*t);
        }
    };
    add_interior(f2, false);
    add_interior(f3, true);
    std::sort(splits.begin(), splits.end());
    splits.erase(std::unique(splits.begin(), splits.end()), splits.end());

    Quadrature q;
    cplx integral = 0.0;
    auto integrand = [&](double t) {
        cplx x = arc.x(t);
        return log_cut(f2.eval(x), theta) * f3.dlog(x) * arc.dx(t);
    };
    for (size_t i = 0; i + 1 < splits.size(); ++i)
        integral += integrate_segment(integrand, splits[i], splits[i + 1], q);

    cplx disc = 0.0;
    if (!f2.constant()) {
        std::vector<double> grid;
        const int n = 1024;
        for (size_t i = 0; i + 1 < splits.size(); ++i)
            for (int j = 0; j <= n; ++j) {
                double u = double(j) / n;
                grid.push_back(splits[i] + (splits[i + 1] - splits[i]) *
                                               (1e-7 + (1.0 - 2e-7) * u));
            }
        for (const Crossing& c : find_crossings(arc, f2, grid)) {
            cplx v3 = f3.eval(arc.x(c.t));
            disc += cplx(0.0, 2.0 * kPi) * double(c.direction) * log_cut(v3, theta);
        }
    } else {
        cplx rotated = f2.unit * std::polar(1.0, -theta);
        if (std::abs(rotated.imag()) < 1e-11 && rotated.real() <= 1e-11)
            throw DegeneratePosition{};
    }

    err_out = q.error + 1e-12;
    // Orientation calibrated so that aj_curve(C_a) = li2(a).
    return integral + disc;
}

cplx aj_sum_raw(const CurveSum& s, unsigned k, double theta, double& err_out) {
    cplx total = 0.0;
    double err = 0.0;
    for (const auto& [t, c] : s.terms()) {
        double e = 0.0;
        total += double(c) * aj_term_raw(t, k, theta, e);
        err += std::abs(double(c)) * e;
    }
    err_out = err;
    return total;
}

template <class F>
auto with_retries(const F& f) {
    static const double thetas[] = {0.0, 0.371, -0.744, 1.113};
    for (double theta : thetas) {
        try {
            return f(theta);
        } catch (const DegeneratePosition&) {
            continue;
        }
    }
    throw degenerate_position_error(
        "cycle stays in degenerate position for every cut rotation; "
        "rewrite the sum via the relations before applying the regulator");
}

}  // namespace

RegulatorValue reduce_mod_lattice(RegulatorValue v) {
    v.value = cplx(reduce_real(v.value.real()), v.value.imag());
    return v;
}

std::complex<double> li2(std::complex<double> z) {
    if (z == cplx(0.0, 0.0)) return 0.0;
    if (z == cplx(1.0, 0.0)) return kPi * kPi / 6.0;
    // Move into |z| <= 1 by inversion, then to Re z <= 1/2 by reflection.
    cplx shift = 0.0;
    double sign = 1.0;
    if (std::abs(z) > 1.0) {
        cplx lz = std::log(-z);
        shift = -kPi * kPi / 6.0 - 0.5 * lz * lz;
        sign = -1.0;
        z = 1.0 / z;
    }
    if (z.real() > 0.5) {
        cplx w = 1.0 - z;
        shift += sign * (kPi * kPi / 6.0 - std::log(z) * std::log(w));
        sign = -sign;
        z = w;
    }
    // Bernoulli series in u = -log(1-z); |u| stays small on this region.
    static const double bern[] = {
        1.0, -0.5, 1.0 / 6, 0.0, -1.0 / 30, 0.0, 1.0 / 42, 0.0, -1.0 / 30, 0.0,
        5.0 / 66, 0.0, -691.0 / 2730, 0.0, 7.0 / 6, 0.0, -3617.0 / 510, 0.0,
        43867.0 / 798, 0.0, -174611.0 / 330, 0.0, 854513.0 / 138, 0.0,
        -236364091.0 / 2730, 0.0, 8553103.0 / 6, 0.0, -23749461029.0 / 870, 0.0,
        8615841276005.0 / 14322};
    cplx u = -std::log(1.0 - z);
    cplx sum = 0.0, p = u;
    double fact = 1.0;
    for (int k = 0; k <= 30; ++k) {
        fact *= k + 1;
        if (bern[k] != 0.0) sum += bern[k] * p / fact;
        p *= u;
    }
    return sign * sum + shift;
}

RegulatorValue aj_curve(const CurveTerm& t, unsigned k) {
    return with_retries([&](double theta) {
        double err = 0.0;
        cplx v = aj_term_raw(t, k, theta, err);
        return reduce_mod_lattice({v, k, err});
    });
}

RegulatorValue aj_sum(const CurveSum& s, unsigned k) {
    return with_retries([&](double theta) {
        double err = 0.0;
        cplx v = aj_sum_raw(s, k, theta, err);
        return reduce_mod_lattice({v, k, err});
    });
}

std::vector<RegulatorValue> aj_all_embeddings(const CurveSum& s) {
    std::vector<RegulatorValue> out;
    unsigned conductor = 1;
    if (!s.terms().empty()) conductor = s.terms().begin()->first.context()->conductor();
    auto ctx = FieldContext::cyclotomic(conductor);
    for (unsigned k : embedding_indices(*ctx)) out.push_back(aj_sum(s, k));
    return out;
}

Pi2Recognition recognize_pi2(const RegulatorValue& v, long max_denominator, double tolerance) {
    Pi2Recognition r;
    if (std::abs(v.value.imag()) > tolerance) {
        r.non_torsion_signal = true;
        return r;
    }
    double target = v.value.real() / (kPi * kPi);
    // Continued-fraction convergents of target.
    double x = target;
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(x);
        if (fl > 1e15 || fl < -1e15) break;
        long a = static_cast<long>(fl);
        long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_denominator) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double rem = x - fl;
        if (std::abs(target - double(p1) / double(q1)) < tolerance / (kPi * kPi)) break;
        if (rem < 1e-15) break;
        x = 1.0 / rem;
    }
    if (q1 == 0 || std::abs(target * double(q1) - double(p1)) > tolerance * double(q1)) return r;
    r.recognized = true;
    r.q = Rational(p1, q1);
    r.q.canonicalize();
    // least n >= 1 with n*q in 4Z
    mpz_class num = r.q.get_num(), den = r.q.get_den();
    mpz_class d = 4 * den, g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), d.get_mpz_t());
    r.implied_order = static_cast<unsigned>(mpz_class(d / g).get_ui());
    return r;
}

}  // namespace chow
