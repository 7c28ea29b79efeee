#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chow/regulator.hpp"
#include "chow/relations.hpp"

namespace chow {

enum class StepKind { ApplyIdentity, Scale, KillTorsion, SubstituteEqual };

std::string step_kind_name(StepKind k);

// Legality route for removing an n-torsion term.
struct KillJustification {
    enum class Kind {
        RightRoot,  // right coordinate is a constant exact n-th root of unity
        MiddleZ,    // term is canonical Z(a, zeta) with both arguments roots
    };
    Kind kind = Kind::RightRoot;
    // MiddleZ only: the arguments of the Z-term.
    std::optional<FieldElement> a, zeta;
};

// One logged rewriting step; payload fields depend on kind.
struct CertStep {
    StepKind kind = StepKind::ApplyIdentity;
    IdentityPtr id;            // ApplyIdentity, SubstituteEqual
    long long weight = 0;      // ApplyIdentity
    long long factor = 1;      // Scale
    std::optional<CurveTerm> term;  // KillTorsion, SubstituteEqual
    unsigned order = 0;        // KillTorsion
    std::optional<KillJustification> just;  // KillTorsion
    std::string describe() const;
};

// Immutable value: a running curve sum plus the append-only step log that
// produced it. Replaying the steps from the initial sum reproduces `current`.
class LedgerState {
  public:
    static LedgerState start(FieldPtr field, CurveSum initial);

    LedgerState apply_identity(const IdentityPtr& id, long long weight) const;
    LedgerState scale(long long m) const;
    LedgerState kill_torsion(const CurveTerm& term, unsigned n, KillJustification just) const;
    // Moves the coefficient of `from` onto the other term of a two-term
    // unit-coefficient identity claim (an equality rewrite).
    LedgerState substitute_equal(const CurveTerm& from, const IdentityPtr& id) const;

    const FieldPtr& field() const { return field_; }
    const CurveSum& initial() const { return initial_; }
    const CurveSum& current() const { return current_; }
    const std::vector<CertStep>& steps() const { return steps_; }

    // Re-executes every logged step from the initial sum, re-checking each
    // step's legality; throws verification_error on any mismatch.
    void replay() const;
    // Product of the scale factors applied so far.
    long long total_scale() const;

  private:
    LedgerState() = default;
    FieldPtr field_;
    CurveSum initial_, current_;
    std::vector<CertStep> steps_;
};

// A replayable torsion-order certificate: ledger shows m * cycle = 0, the
// regulator value bounds the order from below.
struct TorsionCertificate {
    std::string name;
    CurveSum cycle;
    FieldPtr field;
    unsigned long long order_upper_bound = 0;
    bool upper_bound_certified = false;  // false: literature figure, reported only
    std::optional<LedgerState> ledger;
    RegulatorValue regulator_value;
    Pi2Recognition recognition;
    unsigned order_lower_bound = 1;
    bool exact = false;
    std::vector<std::string> annotations;
    // Regulator-only presets: the expected recognized multiple of pi^2.
    std::optional<Rational> expected_q;
    bool numeric_claim_holds = false;
    // Optional non-torsion evidence: a cycle with regulator values per
    // embedding whose imaginary parts stay away from zero.
    std::optional<CurveSum> free_cycle;
    std::vector<RegulatorValue> free_values;
};

// Closes a ledger whose current sum is zero: the replayed steps prove
// total_scale * initial = 0, and the regulator supplies the lower bound.
TorsionCertificate conclude(const LedgerState& state, const CurveSum& target,
                            unsigned embedding = 1);

// Rebuilds a named relation constructor from its parameter string, the
// inverse of Identity::name()/params().
IdentityPtr build_identity(const FieldPtr& ctx, const std::string& name,
                           const std::string& params);

// Preset derivation scripts shipped as structured text documents.
std::vector<std::string> preset_names();
std::string default_preset_dir();
// Loads, replays and concludes one preset; throws verification_error naming
// the failing step on any replay mismatch.
TorsionCertificate run_preset(const std::string& name, const std::string& dir = "");

// Structured-text (JSON) serialization; parse(serialize(x)) == x.
std::string serialize_term(const CurveTerm& t);
CurveTerm parse_term(const FieldPtr& ctx, const std::string& text);
std::string serialize_sum(const CurveSum& s);
CurveSum parse_sum(const FieldPtr& ctx, const std::string& text);
std::string serialize_identity(const IdentityPtr& id);
IdentityPtr parse_identity(const std::string& text);
std::string serialize_certificate(const TorsionCertificate& c);
TorsionCertificate parse_certificate(const std::string& text);
std::string serialize_steps(const LedgerState& state);

}  // namespace chow
