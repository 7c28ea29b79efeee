#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "chow/ledger.hpp"
#include "chow/relations.hpp"

using namespace chow;
using namespace chow::rel;
using json = nlohmann::json;

namespace {

struct RouteBuilder {
    FieldPtr ctx;
    LedgerState st;

    RouteBuilder(FieldPtr c, const CurveSum& target)
        : ctx(std::move(c)), st(LedgerState::start(ctx, target)) {}

    void scale(long long m) { st = st.scale(m); }

    void apply(const IdentityPtr& id, long long w) { st = st.apply_identity(id, w); }

    void cancel(const IdentityPtr& id, const CurveTerm& t) {
        long long c = st.current().coeff(t);
        long long d = id->claim().coeff(t);
        if (c == 0 || d == 0 || c % d != 0)
            throw std::runtime_error("cannot cancel " + t.str() + " (c=" + std::to_string(c) +
                                     ", d=" + std::to_string(d) + ")");
        apply(id, -c / d);
    }

    bool try_kill_right(const CurveTerm& t) {
        const FactoredRational& f3 = t.coord(2);
        if (!f3.is_constant()) return false;
        auto ord = f3.unit().root_of_unity_order();
        if (!ord || *ord < 2) return false;
        long long c = st.current().coeff(t);
        auto id = right_root_kill(t.coord(0), t.coord(1), f3.unit());
        long long d = id->claim().coeff(t);
        if (d == 0 || c % d != 0) return false;
        if (c % static_cast<long long>(*ord) == 0) {
            KillJustification just;
            just.kind = KillJustification::Kind::RightRoot;
            st = st.kill_torsion(t, *ord, just);
        } else {
            st = st.apply_identity(id, -c / d);
        }
        return true;
    }

    bool try_kill_z(const FieldElement& a, const FieldElement& zeta, const CurveTerm& t) {
        auto ma = a.root_of_unity_order();
        auto mz = zeta.root_of_unity_order();
        if (!ma || !mz) return false;
        long long c = st.current().coeff(t);
        auto id = z_torsion_kill(a, zeta);
        long long d = id->claim().coeff(t);
        if (d == 0 || c % d != 0) return false;
        unsigned order = *ma * *mz;
        if (c % static_cast<long long>(order) == 0) {
            KillJustification just;
            just.kind = KillJustification::Kind::MiddleZ;
            just.a = a;
            just.zeta = zeta;
            st = st.kill_torsion(t, order, just);
        } else {
            st = st.apply_identity(id, -c / d);
        }
        return true;
    }

    void greedy(const std::vector<FieldElement>& pool) {
        auto isroot = [](const FieldElement& e) { return (bool)e.root_of_unity_order(); };
        int guard = 0;
        bool progress = true;
        while (!st.current().is_zero() && progress && guard++ < 500) {
            progress = false;
            for (const auto& [t, c] : st.current().terms()) {
                if (try_kill_right(t)) {
                    progress = true;
                    break;
                }
            }
            if (progress) continue;
            for (const auto& [t, c] : st.current().terms()) {
                for (size_t A = 0; A < pool.size() && !progress; ++A) {
                    for (size_t C = 0; C < pool.size() && !progress; ++C) {
                        const FieldElement &al = pool[A], &cc = pool[C];
                        if (al.is_one() || cc.is_one()) continue;
                        if (canonical_term(z_curve(al, cc)) != t) continue;
                        bool ra = isroot(al), rc = isroot(cc);
                        if (ra && rc) {
                            if (try_kill_z(al, cc, t)) progress = true;
                            continue;
                        }
                        IdentityPtr id;
                        if (ra && !rc) {
                            id = z_symmetry(al, cc);
                        } else {
                            FieldElement iv = al.inverse();
                            if (iv.str() < al.str()) id = z_inverse(al, cc);
                        }
                        if (!id) continue;
                        long long d = id->claim().coeff(t);
                        if (d == 0 || c % d != 0) continue;
                        st = st.apply_identity(id, -c / d);
                        progress = true;
                    }
                }
                if (progress) break;
            }
        }
    }
};

std::vector<FieldElement> standard_pool(const FieldPtr& ctx,
                                        const std::vector<FieldElement>& seeds) {
    FieldElement one = FieldElement::one(ctx);
    std::vector<FieldElement> pool;
    auto addp = [&](const FieldElement& e) {
        if (e.is_zero()) return;
        for (const auto& p : pool)
            if (p == e) return;
        pool.push_back(e);
    };
    for (const FieldElement& e : seeds) {
        addp(e);
        addp(e.inverse());
        addp(one - e);
        addp(-e);
    }
    return pool;
}

json target_json(const std::vector<std::pair<std::string, long long>>& entries) {
    json arr = json::array();
    for (const auto& [a, c] : entries) arr.push_back({{"a", a}, {"coeff", c}});
    return arr;
}

void write_preset(const std::string& dir, const std::string& name, const json& j) {
    std::ofstream out(dir + "/" + name + ".json");
    if (!out) throw std::runtime_error("cannot write " + dir + "/" + name + ".json");
    out << j.dump(2) << "\n";
    std::cout << "wrote " << name << ".json (" << j.at("kind").get<std::string>() << ")\n";
}

// appends the closure of 24*C_1 over Q(i); the running coefficient of C_1 must
// be divisible by 24 times `mult` on entry
void q_block(RouteBuilder& rb, long long mult) {
    const FieldPtr& ctx = rb.ctx;
    FieldElement one = FieldElement::one(ctx);
    unsigned n = ctx->max_root_order();
    FieldElement i = FieldElement::root_of_unity(ctx, 4);
    auto pool = standard_pool(
        ctx, {i, -i, -one, one - i, one + i,
              (one - i) * FieldElement::from_rational(ctx, Rational(1, 2)),
              (one + i) * FieldElement::from_rational(ctx, Rational(1, 2)),
              FieldElement::from_rational(ctx, Rational(2))});
    (void)n;
    rb.apply(distribution(one, 2), 4 * mult);
    rb.apply(inversion_even(i, -i), mult);
    rb.apply(inversion_even(-i, i), mult);
    rb.greedy(pool);
    for (FieldElement a : {one + i, one - i})
        for (FieldElement c : {i, -i})
            rb.cancel(z_symmetry(a, c), canonical_term(z_curve(a, c)));
    rb.cancel(z_split(one + i, one - i, i), canonical_term(z_curve(i, one + i)));
    rb.cancel(z_split(one + i, one - i, -i), canonical_term(z_curve(-i, one + i)));
    rb.greedy(pool);
    if (!rb.st.current().is_zero()) {
        rb.cancel(z_inverse(-i, i), canonical_term(z_curve(-i, i)));
        rb.greedy(pool);
    }
    if (!rb.st.current().is_zero())
        rb.cancel(z_torsion_kill(i, i), canonical_term(z_curve(i, i)));
}

json gen_q_steps() {
    FieldPtr ctx = FieldContext::cyclotomic(4);
    CurveSum target;
    add_canonical(target, totaro_curve(FieldElement::one(ctx)), 1);
    RouteBuilder rb(ctx, target);
    rb.scale(24);
    q_block(rb, 1);
    if (!rb.st.current().is_zero()) throw std::runtime_error("Q route did not close");
    conclude(rb.st, target, 1);
    return json::parse(serialize_steps(rb.st));
}

void gen_q(const std::string& dir) {
    json j{{"conductor", 4},
           {"kind", "ledger"},
           {"target", target_json({{"1", 1}})},
           {"embedding", 1},
           {"steps", gen_q_steps()},
           {"annotations",
            json::array({"the derivation runs over Q(i); torsion kills need roots of unity, "
                         "and the conclusion descends to Q because the cycle is defined there",
                         "matches the order 24 of the second Bott torsion group over Q"})}};
    write_preset(dir, "Q", j);
}

void gen_qi(const std::string& dir) {
    json j{{"conductor", 4},
           {"kind", "ledger"},
           {"target", target_json({{"1", 1}})},
           {"embedding", 1},
           {"steps", gen_q_steps()},
           {"free_cycle", target_json({{"g", 4}})},
           {"annotations",
            json::array({"the abelian-Jacobi value of 4*C(g) has nonzero imaginary part at "
                         "every complex embedding, so 4*C(g) is not torsion over Q(i)"})}};
    write_preset(dir, "Qi", j);
}

void gen_qzeta3(const std::string& dir) {
    FieldPtr ctx = FieldContext::cyclotomic(12);
    FieldElement one = FieldElement::one(ctx);
    FieldElement z = FieldElement::root_of_unity(ctx, 3);
    CurveSum target;
    add_canonical(target, totaro_curve(z), 3);
    add_canonical(target, totaro_curve(z * z), 3);
    RouteBuilder rb(ctx, target);
    rb.scale(12);
    rb.apply(distribution(one, 3), 4);
    q_block(rb, -1);
    if (!rb.st.current().is_zero()) throw std::runtime_error("Qzeta3 route did not close");
    conclude(rb.st, target, 1);
    json j{{"conductor", 12},
           {"kind", "ledger"},
           {"target", target_json({{z.str(), 3}, {(z * z).str(), 3}})},
           {"embedding", 1},
           {"steps", json::parse(serialize_steps(rb.st))},
           {"annotations",
            json::array({"the derivation runs over Q(zeta_12), the compositum of Q(zeta_3) "
                         "and Q(i); the i-torsion kills reuse the rational block",
                         "matches the order 12 predicted over Q(zeta_3)"})}};
    write_preset(dir, "Qzeta3", j);
}

}  // namespace

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "presets";
    std::vector<std::string> names;
    for (int k = 2; k < argc; ++k) names.push_back(argv[k]);
    auto want = [&](const std::string& n) {
        return names.empty() || std::find(names.begin(), names.end(), n) != names.end();
    };
    try {
        if (want("Q")) gen_q(dir);
        if (want("Qi")) gen_qi(dir);
        if (want("Qzeta3")) gen_qzeta3(dir);
    } catch (const std::exception& e) {
        std::cerr << "preset generation failed: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
