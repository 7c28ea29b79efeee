#include "chow/ledger.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "chow/errors.hpp"

namespace chow {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::vector<std::string> split_params(const std::string& params) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (pos <= params.size()) {
        size_t next = params.find(';', pos);
        if (next == std::string::npos) next = params.size();
        std::string piece = trim(params.substr(pos, next - pos));
        size_t eq = piece.find('=');
        // strip a "name =" label; field elements themselves never contain '='
        if (eq != std::string::npos && piece.rfind("(x", 0) != 0) {
            std::string key = trim(piece.substr(0, eq));
            if (!key.empty() && key.find(' ') == std::string::npos)
                piece = trim(piece.substr(eq + 1));
        }
        out.push_back(piece);
        pos = next + 1;
    }
    if (!out.empty() && out.back().empty()) out.pop_back();
    return out;
}

// Inverse of FactoredRational::str().
FactoredRational parse_rational_text(const FieldPtr& ctx, const std::string& text) {
    std::string s = trim(text);
    if (s.empty()) throw parse_error("empty rational function", 0);
    FieldElement unit = FieldElement::one(ctx);
    std::vector<std::pair<FieldElement, int>> factors;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find(" * ", pos);
        std::string piece = s.substr(pos, next == std::string::npos ? std::string::npos
                                                                    : next - pos);
        pos = next == std::string::npos ? s.size() : next + 3;
        piece = trim(piece);
        if (piece.empty()) continue;
        int exp = 1;
        size_t caret = piece.rfind('^');
        size_t last_paren = piece.rfind(')');
        // an exponent only follows the closing paren or a bare x
        if (caret != std::string::npos &&
            (last_paren == std::string::npos ? piece[0] == 'x' : caret > last_paren)) {
            exp = std::stoi(piece.substr(caret + 1));
            piece = trim(piece.substr(0, caret));
        }
        if (piece == "x") {
            factors.emplace_back(FieldElement::zero(ctx), exp);
        } else if (piece.rfind("(x -", 0) == 0 || piece.rfind("(x +", 0) == 0) {
            bool minus = piece[3] == '-';
            std::string inner = trim(piece.substr(4, piece.size() - 5));
            if (!inner.empty() && inner.front() == '(' && inner.back() == ')')
                inner = inner.substr(1, inner.size() - 2);
            FieldElement r = FieldElement::parse(ctx, inner);
            factors.emplace_back(minus ? r : -r, exp);
        } else {
            std::string inner = piece;
            if (!inner.empty() && inner.front() == '(' && inner.back() == ')')
                inner = inner.substr(1, inner.size() - 2);
            unit = unit * FieldElement::parse(ctx, inner).pow(exp);
        }
    }
    return FactoredRational::make(unit, factors);
}

rel::Slot parse_slot(const std::string& s) {
    if (s == "left") return rel::Slot::Left;
    if (s == "middle") return rel::Slot::Middle;
    if (s == "right") return rel::Slot::Right;
    throw parse_error("unknown product rule slot: " + s, 0);
}

// JSON forms of the basic objects.

json rational_to_json(const FactoredRational& f) {
    json factors = json::array();
    for (const auto& [r, e] : f.factors()) factors.push_back({r.str(), e});
    return {{"unit", f.unit().str()}, {"factors", factors}};
}

FactoredRational rational_from_json(const FieldPtr& ctx, const json& j) {
    FieldElement unit = FieldElement::parse(ctx, j.at("unit").get<std::string>());
    std::vector<std::pair<FieldElement, int>> factors;
    for (const auto& f : j.at("factors"))
        factors.emplace_back(FieldElement::parse(ctx, f.at(0).get<std::string>()),
                             f.at(1).get<int>());
    return FactoredRational::make(unit, factors);
}

json term_to_json(const CurveTerm& t) {
    return {{"f1", rational_to_json(t.coord(0))},
            {"f2", rational_to_json(t.coord(1))},
            {"f3", rational_to_json(t.coord(2))}};
}

CurveTerm term_from_json(const FieldPtr& ctx, const json& j) {
    return CurveTerm(rational_from_json(ctx, j.at("f1")), rational_from_json(ctx, j.at("f2")),
                     rational_from_json(ctx, j.at("f3")));
}

json sum_to_json(const CurveSum& s) {
    json out = json::array();
    for (const auto& [t, c] : s.terms()) out.push_back({{"coeff", c}, {"term", term_to_json(t)}});
    return out;
}

CurveSum sum_from_json(const FieldPtr& ctx, const json& j) {
    CurveSum s;
    for (const auto& e : j)
        s.add(term_from_json(ctx, e.at("term")), e.at("coeff").get<long long>());
    return s;
}

json step_to_json(const CertStep& s) {
    json j{{"kind", step_kind_name(s.kind)}};
    switch (s.kind) {
        case StepKind::ApplyIdentity:
            j["name"] = s.id->name();
            j["params"] = s.id->params();
            j["weight"] = s.weight;
            break;
        case StepKind::Scale:
            j["factor"] = s.factor;
            break;
        case StepKind::KillTorsion: {
            j["term"] = term_to_json(*s.term);
            j["order"] = s.order;
            json just;
            if (s.just->kind == KillJustification::Kind::RightRoot) {
                just["kind"] = "right";
            } else {
                just["kind"] = "z";
                just["a"] = s.just->a->str();
                just["zeta"] = s.just->zeta->str();
            }
            j["justification"] = just;
            break;
        }
        case StepKind::SubstituteEqual:
            j["term"] = term_to_json(*s.term);
            j["name"] = s.id->name();
            j["params"] = s.id->params();
            break;
    }
    return j;
}

CertStep step_from_json(const FieldPtr& ctx, const json& j) {
    CertStep s;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "apply_identity") {
        s.kind = StepKind::ApplyIdentity;
        s.id = build_identity(ctx, j.at("name").get<std::string>(),
                              j.at("params").get<std::string>());
        s.weight = j.at("weight").get<long long>();
    } else if (kind == "scale") {
        s.kind = StepKind::Scale;
        s.factor = j.at("factor").get<long long>();
    } else if (kind == "kill_torsion") {
        s.kind = StepKind::KillTorsion;
        s.term = term_from_json(ctx, j.at("term"));
        s.order = j.at("order").get<unsigned>();
        KillJustification just;
        const json& jj = j.at("justification");
        if (jj.at("kind") == "right") {
            just.kind = KillJustification::Kind::RightRoot;
        } else if (jj.at("kind") == "z") {
            just.kind = KillJustification::Kind::MiddleZ;
            just.a = FieldElement::parse(ctx, jj.at("a").get<std::string>());
            just.zeta = FieldElement::parse(ctx, jj.at("zeta").get<std::string>());
        } else {
            throw parse_error("unknown kill justification", 0);
        }
        s.just = just;
    } else if (kind == "substitute_equal") {
        s.kind = StepKind::SubstituteEqual;
        s.term = term_from_json(ctx, j.at("term"));
        s.id = build_identity(ctx, j.at("name").get<std::string>(),
                              j.at("params").get<std::string>());
    } else {
        throw parse_error("unknown step kind: " + kind, 0);
    }
    return s;
}

// Executes one step against a running sum, re-checking its legality.
void exec_step(CurveSum& cur, const CertStep& s) {
    switch (s.kind) {
        case StepKind::ApplyIdentity: {
            if (s.weight == 0) throw verification_error("apply_identity with weight 0");
            s.id->verify();
            cur.add(s.id->claim(), s.weight);
            return;
        }
        case StepKind::Scale: {
            if (s.factor == 0) throw verification_error("scale by 0");
            CurveSum scaled;
            scaled.add(cur, s.factor);
            cur = scaled;
            return;
        }
        case StepKind::KillTorsion: {
            const CurveTerm& t = *s.term;
            long long c = cur.coeff(t);
            if (c == 0) throw verification_error("kill_torsion: term not present");
            if (s.order == 0 || c % static_cast<long long>(s.order) != 0)
                throw verification_error("kill_torsion: coefficient " + std::to_string(c) +
                                         " not divisible by " + std::to_string(s.order));
            IdentityPtr kill;
            if (s.just->kind == KillJustification::Kind::RightRoot) {
                const FactoredRational& f3 = t.coord(2);
                if (!f3.is_constant())
                    throw verification_error("kill_torsion: right coordinate not constant");
                auto ord = f3.unit().root_of_unity_order();
                if (!ord || *ord != s.order)
                    throw verification_error(
                        "kill_torsion: right coordinate is not an exact root of the stated "
                        "order");
                kill = rel::right_root_kill(t.coord(0), t.coord(1), f3.unit());
            } else {
                const FieldElement& a = *s.just->a;
                const FieldElement& zeta = *s.just->zeta;
                if (canonical_term(z_curve(a, zeta)) != t)
                    throw verification_error(
                        "kill_torsion: term is not the stated Z-class");
                auto m = a.root_of_unity_order();
                auto n = zeta.root_of_unity_order();
                if (!m || !n || *m * *n != s.order)
                    throw verification_error(
                        "kill_torsion: arguments are not roots of unity of the stated orders");
                kill = rel::z_torsion_kill(a, zeta);
            }
            kill->verify();
            long long d = kill->claim().coeff(t);
            if (d == 0 || c % d != 0)
                throw verification_error("kill_torsion: justification does not cancel the term");
            cur.add(kill->claim(), -c / d);
            if (cur.coeff(t) != 0)
                throw verification_error("kill_torsion: term survived its own kill");
            return;
        }
        case StepKind::SubstituteEqual: {
            s.id->verify();
            const CurveSum& claim = s.id->claim();
            if (claim.size() != 2)
                throw verification_error("substitute_equal needs a two-term claim");
            long long d = claim.coeff(*s.term);
            if (d != 1 && d != -1)
                throw verification_error("substitute_equal needs unit coefficients");
            for (const auto& [t, c] : claim.terms())
                if (c != 1 && c != -1)
                    throw verification_error("substitute_equal needs unit coefficients");
            long long c = cur.coeff(*s.term);
            if (c == 0) throw verification_error("substitute_equal: term not present");
            cur.add(claim, -c * d);
            return;
        }
    }
    throw verification_error("unknown step kind");
}

}  // namespace

std::string step_kind_name(StepKind k) {
    switch (k) {
        case StepKind::ApplyIdentity: return "apply_identity";
        case StepKind::Scale: return "scale";
        case StepKind::KillTorsion: return "kill_torsion";
        case StepKind::SubstituteEqual: return "substitute_equal";
    }
    return "?";
}

std::string CertStep::describe() const {
    switch (kind) {
        case StepKind::ApplyIdentity:
            return "apply " + id->describe() + " * " + std::to_string(weight);
        case StepKind::Scale:
            return "scale by " + std::to_string(factor);
        case StepKind::KillTorsion:
            return "kill " + std::to_string(order) + "-torsion term " + term->str();
        case StepKind::SubstituteEqual:
            return "substitute via " + id->describe();
    }
    return "?";
}

LedgerState LedgerState::start(FieldPtr field, CurveSum initial) {
    LedgerState s;
    s.field_ = std::move(field);
    s.initial_ = initial;
    s.current_ = std::move(initial);
    return s;
}

LedgerState LedgerState::apply_identity(const IdentityPtr& id, long long weight) const {
    CertStep step;
    step.kind = StepKind::ApplyIdentity;
    step.id = id;
    step.weight = weight;
    LedgerState next = *this;
    exec_step(next.current_, step);
    next.steps_.push_back(std::move(step));
    return next;
}

LedgerState LedgerState::scale(long long m) const {
    CertStep step;
    step.kind = StepKind::Scale;
    step.factor = m;
    LedgerState next = *this;
    exec_step(next.current_, step);
    next.steps_.push_back(std::move(step));
    return next;
}

LedgerState LedgerState::kill_torsion(const CurveTerm& term, unsigned n,
                                      KillJustification just) const {
    CertStep step;
    step.kind = StepKind::KillTorsion;
    step.term = term;
    step.order = n;
    step.just = std::move(just);
    LedgerState next = *this;
    exec_step(next.current_, step);
    next.steps_.push_back(std::move(step));
    return next;
}

LedgerState LedgerState::substitute_equal(const CurveTerm& from, const IdentityPtr& id) const {
    CertStep step;
    step.kind = StepKind::SubstituteEqual;
    step.term = from;
    step.id = id;
    LedgerState next = *this;
    exec_step(next.current_, step);
    next.steps_.push_back(std::move(step));
    return next;
}

void LedgerState::replay() const {
    CurveSum cur = initial_;
    size_t index = 0;
    for (const CertStep& s : steps_) {
        try {
            exec_step(cur, s);
        } catch (const error& e) {
            throw verification_error("step " + std::to_string(index) + " (" + s.describe() +
                                     ") failed to replay: " + e.what());
        }
        ++index;
    }
    if (!(cur == current_))
        throw verification_error("replay does not reproduce the recorded sum");
}

long long LedgerState::total_scale() const {
    long long m = 1;
    for (const CertStep& s : steps_)
        if (s.kind == StepKind::Scale) m *= s.factor;
    return m;
}

TorsionCertificate conclude(const LedgerState& state, const CurveSum& target,
                            unsigned embedding) {
    if (!state.current().is_zero())
        throw verification_error("conclude: derivation incomplete, current sum is nonzero");
    state.replay();
    if (!(state.initial() == target))
        throw verification_error("conclude: ledger does not start from the stated target");
    long long m = state.total_scale();
    if (m <= 0) throw verification_error("conclude: nonpositive total scale");

    TorsionCertificate cert;
    cert.cycle = target;
    cert.field = state.field();
    cert.order_upper_bound = static_cast<unsigned long long>(m);
    cert.upper_bound_certified = true;
    cert.ledger = state;
    cert.regulator_value = aj_sum(target, embedding);
    cert.recognition = recognize_pi2(cert.regulator_value);
    cert.order_lower_bound = cert.recognition.recognized ? cert.recognition.implied_order : 1;
    if (cert.recognition.recognized) {
        Rational prod = cert.recognition.q * Rational(static_cast<long>(m));
        prod.canonicalize();
        if (prod.get_den() != 1 || mpz_class(prod.get_num() % 4) != 0)
            throw verification_error(
                "conclude: regulator value times the certified order leaves the lattice");
    }
    cert.exact = cert.recognition.recognized && !cert.recognition.non_torsion_signal &&
                 cert.order_lower_bound == cert.order_upper_bound;
    return cert;
}

IdentityPtr build_identity(const FieldPtr& ctx, const std::string& name,
                           const std::string& params) {
    using namespace rel;
    auto p = split_params(params);
    auto elem = [&](size_t i) { return FieldElement::parse(ctx, p.at(i)); };
    auto rat = [&](size_t i) { return parse_rational_text(ctx, p.at(i)); };
    try {
        if (name == "two_term") return two_term(elem(0));
        if (name == "z_symmetry") return z_symmetry(elem(0), elem(1));
        if (name == "z_inverse") return z_inverse(elem(0), elem(1));
        if (name == "z_torsion_kill") return z_torsion_kill(elem(0), elem(1));
        if (name == "z_shift") return z_shift(elem(0), elem(1), elem(2));
        if (name == "z_split") return z_split(elem(0), elem(1), elem(2));
        if (name == "z_denominator_swap") return z_denominator_swap(elem(0), elem(1), elem(2));
        if (name == "five_term") return five_term(elem(0), elem(1));
        if (name == "five_term_sym") return five_term_sym(elem(0), elem(1));
        if (name == "five_term_even") return five_term_even(elem(0), elem(1));
        if (name == "inversion") return inversion(elem(0), elem(1));
        if (name == "inversion_even") return inversion_even(elem(0), elem(1));
        if (name == "distribution") {
            unsigned n = static_cast<unsigned>(std::stoul(p.at(1)));
            return distribution(elem(0), n);
        }
        if (name == "product_rule")
            return product_rule(parse_slot(p.at(0)), rat(1), rat(2), rat(3), rat(4));
        if (name == "swap23") return swap23(rat(0), rat(1), rat(2));
        if (name == "swap12") return swap12(rat(0), rat(1), rat(2));
        if (name == "swap13") return swap13(rat(0), rat(1), rat(2));
        if (name == "reciprocal") return reciprocal(rat(0), rat(1), rat(2));
        if (name == "reciprocal_mid") return reciprocal_mid(rat(0), rat(1), rat(2));
        if (name == "reciprocal_right") return reciprocal_right(rat(0), rat(1), rat(2));
        if (name == "right_root_kill") return right_root_kill(rat(0), rat(1), elem(2));
    } catch (const std::out_of_range&) {
        throw invalid_argument_error("identity " + name + ": missing parameters in \"" +
                                     params + "\"");
    }
    throw invalid_argument_error("unknown identity constructor: " + name);
}

std::string serialize_steps(const LedgerState& state) {
    json arr = json::array();
    for (const CertStep& s : state.steps()) arr.push_back(step_to_json(s));
    return arr.dump(2);
}

std::string serialize_term(const CurveTerm& t) { return term_to_json(t).dump(2); }

CurveTerm parse_term(const FieldPtr& ctx, const std::string& text) {
    try {
        return term_from_json(ctx, json::parse(text));
    } catch (const json::exception& e) {
        throw parse_error(e.what(), 0);
    }
}

std::string serialize_sum(const CurveSum& s) { return sum_to_json(s).dump(2); }

CurveSum parse_sum(const FieldPtr& ctx, const std::string& text) {
    try {
        return sum_from_json(ctx, json::parse(text));
    } catch (const json::exception& e) {
        throw parse_error(e.what(), 0);
    }
}

std::string serialize_identity(const IdentityPtr& id) {
    json j{{"name", id->name()},
           {"params", id->params()},
           {"conductor", id->context()->conductor()},
           {"claim", sum_to_json(id->claim())}};
    return j.dump(2);
}

IdentityPtr parse_identity(const std::string& text) {
    try {
        json j = json::parse(text);
        auto ctx = FieldContext::cyclotomic(j.at("conductor").get<unsigned>());
        IdentityPtr id = build_identity(ctx, j.at("name").get<std::string>(),
                                        j.at("params").get<std::string>());
        if (j.contains("claim") && !(sum_from_json(ctx, j.at("claim")) == id->claim()))
            throw verification_error("stored claim differs from the rebuilt identity");
        return id;
    } catch (const json::exception& e) {
        throw parse_error(e.what(), 0);
    }
}

namespace {

json regulator_to_json(const RegulatorValue& v) {
    return {{"re", v.value.real()},
            {"im", v.value.imag()},
            {"embedding", v.embedding_index},
            {"precision", v.precision_estimate}};
}

RegulatorValue regulator_from_json(const json& j) {
    return {{j.at("re").get<double>(), j.at("im").get<double>()},
            j.at("embedding").get<unsigned>(), j.at("precision").get<double>()};
}

}  // namespace

std::string serialize_certificate(const TorsionCertificate& c) {
    json j;
    j["name"] = c.name;
    j["conductor"] = c.field->conductor();
    j["cycle"] = sum_to_json(c.cycle);
    j["order_upper_bound"] = c.order_upper_bound;
    j["upper_bound_certified"] = c.upper_bound_certified;
    j["order_lower_bound"] = c.order_lower_bound;
    j["exact"] = c.exact;
    j["regulator"] = regulator_to_json(c.regulator_value);
    if (c.recognition.recognized) {
        j["recognized_q"] = c.recognition.q.get_str();
        j["implied_order"] = c.recognition.implied_order;
    }
    j["non_torsion_signal"] = c.recognition.non_torsion_signal;
    if (c.expected_q) j["expected_q"] = c.expected_q->get_str();
    j["numeric_claim_holds"] = c.numeric_claim_holds;
    j["annotations"] = c.annotations;
    if (c.ledger) {
        json steps = json::array();
        for (const CertStep& s : c.ledger->steps()) steps.push_back(step_to_json(s));
        j["initial"] = sum_to_json(c.ledger->initial());
        j["steps"] = steps;
    }
    if (c.free_cycle) {
        j["free_cycle"] = sum_to_json(*c.free_cycle);
        json vals = json::array();
        for (const RegulatorValue& v : c.free_values) vals.push_back(regulator_to_json(v));
        j["free_values"] = vals;
    }
    return j.dump(2);
}

TorsionCertificate parse_certificate(const std::string& text) {
    try {
        json j = json::parse(text);
        TorsionCertificate c;
        c.name = j.at("name").get<std::string>();
        c.field = FieldContext::cyclotomic(j.at("conductor").get<unsigned>());
        c.cycle = sum_from_json(c.field, j.at("cycle"));
        c.order_upper_bound = j.at("order_upper_bound").get<unsigned long long>();
        c.upper_bound_certified = j.at("upper_bound_certified").get<bool>();
        c.order_lower_bound = j.at("order_lower_bound").get<unsigned>();
        c.exact = j.at("exact").get<bool>();
        c.regulator_value = regulator_from_json(j.at("regulator"));
        if (j.contains("recognized_q")) {
            c.recognition.recognized = true;
            c.recognition.q = Rational(j.at("recognized_q").get<std::string>());
            c.recognition.implied_order = j.at("implied_order").get<unsigned>();
        }
        c.recognition.non_torsion_signal = j.at("non_torsion_signal").get<bool>();
        if (j.contains("expected_q")) c.expected_q = Rational(j.at("expected_q").get<std::string>());
        c.numeric_claim_holds = j.at("numeric_claim_holds").get<bool>();
        c.annotations = j.at("annotations").get<std::vector<std::string>>();
        if (j.contains("steps")) {
            LedgerState st = LedgerState::start(c.field, sum_from_json(c.field, j.at("initial")));
            for (const auto& js : j.at("steps")) {
                CertStep step = step_from_json(c.field, js);
                switch (step.kind) {
                    case StepKind::ApplyIdentity:
                        st = st.apply_identity(step.id, step.weight);
                        break;
                    case StepKind::Scale:
                        st = st.scale(step.factor);
                        break;
                    case StepKind::KillTorsion:
                        st = st.kill_torsion(*step.term, step.order, *step.just);
                        break;
                    case StepKind::SubstituteEqual:
                        st = st.substitute_equal(*step.term, step.id);
                        break;
                }
            }
            c.ledger = std::move(st);
        }
        if (j.contains("free_cycle")) {
            c.free_cycle = sum_from_json(c.field, j.at("free_cycle"));
            for (const auto& jv : j.at("free_values"))
                c.free_values.push_back(regulator_from_json(jv));
        }
        return c;
    } catch (const json::exception& e) {
        throw parse_error(e.what(), 0);
    }
}

std::vector<std::string> preset_names() {
    return {"Q", "Qi", "Qzeta3", "Qzeta5", "Qzeta8", "Qsqrt5", "Qsqrt2"};
}

std::string default_preset_dir() {
#ifdef CHOW_PRESET_DIR
    return CHOW_PRESET_DIR;
#else
    return "presets";
#endif
}

TorsionCertificate run_preset(const std::string& name, const std::string& dir) {
    std::string base = dir.empty() ? default_preset_dir() : dir;
    std::ifstream in(base + "/" + name + ".json");
    if (!in) throw invalid_argument_error("no preset named " + name + " in " + base);
    std::stringstream buf;
    buf << in.rdbuf();
    json j;
    try {
        j = json::parse(buf.str());
    } catch (const json::exception& e) {
        throw parse_error(e.what(), 0);
    }

    auto ctx = FieldContext::cyclotomic(j.at("conductor").get<unsigned>());
    CurveSum target;
    for (const auto& e : j.at("target")) {
        FieldElement a = FieldElement::parse(ctx, e.at("a").get<std::string>());
        add_canonical(target, totaro_curve(a), e.at("coeff").get<long long>());
    }
    unsigned embedding = j.value("embedding", 1u);

    TorsionCertificate cert;
    if (j.at("kind") == "ledger") {
        LedgerState st = LedgerState::start(ctx, target);
        for (const auto& js : j.at("steps")) {
            CertStep step = step_from_json(ctx, js);
            switch (step.kind) {
                case StepKind::ApplyIdentity:
                    st = st.apply_identity(step.id, step.weight);
                    break;
                case StepKind::Scale:
                    st = st.scale(step.factor);
                    break;
                case StepKind::KillTorsion:
                    st = st.kill_torsion(*step.term, step.order, *step.just);
                    break;
                case StepKind::SubstituteEqual:
                    st = st.substitute_equal(*step.term, step.id);
                    break;
            }
        }
        cert = conclude(st, target, embedding);
    } else {
        cert.cycle = target;
        cert.field = ctx;
        cert.regulator_value = aj_sum(target, embedding);
        cert.recognition = recognize_pi2(cert.regulator_value);
        cert.order_lower_bound =
            cert.recognition.recognized ? cert.recognition.implied_order : 1;
        cert.order_upper_bound = j.value("literature_order", 0ull);
        cert.upper_bound_certified = false;
        if (j.contains("expected_q")) {
            cert.expected_q = Rational(j.at("expected_q").get<std::string>());
            cert.expected_q->canonicalize();
            cert.numeric_claim_holds =
                cert.recognition.recognized && cert.recognition.q == *cert.expected_q;
        }
    }
    cert.name = name;
    if (j.contains("annotations"))
        cert.annotations = j.at("annotations").get<std::vector<std::string>>();
    if (j.contains("free_cycle")) {
        CurveSum fc;
        for (const auto& e : j.at("free_cycle")) {
            FieldElement a = FieldElement::parse(ctx, e.at("a").get<std::string>());
            add_canonical(fc, totaro_curve(a), e.at("coeff").get<long long>());
        }
        cert.free_cycle = fc;
        cert.free_values = aj_all_embeddings(fc);
    }
    return cert;
}

}  // namespace chow
