#include "twistkit/checks.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "twistkit/errors.hpp"
#include "twistkit/quaternionic.hpp"
#include "twistkit/zoo.hpp"

namespace twistkit {

namespace {

enum class ArgKind { ComplexName, MetricName, TripleName, FormName, Int };

struct CheckSpec {
    std::vector<ArgKind> args;
    std::vector<ArgKind> optional_args;
    bool needs_twist = false;
};

const std::map<std::string, CheckSpec>& catalog() {
    static const std::map<std::string, CheckSpec> specs = {
        {"validate_model", {{}, {}, false}},
        {"validate_twist_data", {{}, {}, true}},
        {"twist_tensor", {{}, {}, true}},
        {"build_twisted_model", {{}, {}, true}},
        {"dual_twist_data", {{}, {}, true}},
        {"twist_integrability",
         {{ArgKind::ComplexName}, {ArgKind::Int, ArgKind::Int}, true}},
        {"nijenhuis", {{ArgKind::ComplexName}, {}, false}},
        {"kaehler_form", {{ArgKind::MetricName, ArgKind::ComplexName}, {}, false}},
        {"bismut_torsion", {{ArgKind::MetricName, ArgKind::ComplexName}, {}, false}},
        {"is_skt", {{ArgKind::MetricName, ArgKind::ComplexName}, {}, false}},
        {"is_hypercomplex", {{ArgKind::TripleName}, {}, false}},
        {"is_hkt", {{ArgKind::MetricName, ArgKind::TripleName}, {}, false}},
        {"hkt_twist_condition", {{ArgKind::MetricName, ArgKind::TripleName}, {}, true}},
        {"hypercomplex_twist_condition", {{ArgKind::TripleName}, {}, true}},
        {"is_instanton", {{ArgKind::TripleName}, {}, true}},
        {"volume_twist_condition", {{ArgKind::ComplexName, ArgKind::FormName}, {}, true}},
        {"sl_volume_check", {{ArgKind::TripleName, ArgKind::FormName}, {}, false}},
    };
    return specs;
}

bool resolves(const ModelFile& f, ArgKind kind, const std::string& arg) {
    try {
        switch (kind) {
            case ArgKind::ComplexName: f.complex_structure(arg); return true;
            case ArgKind::MetricName: f.metric(arg); return true;
            case ArgKind::TripleName: f.triple(arg); return true;
            case ArgKind::FormName: f.named_form(arg); return true;
            case ArgKind::Int:
                return !arg.empty() && arg.find_first_not_of("0123456789") == std::string::npos;
        }
    } catch (const UnknownName&) {
        return false;
    }
    return false;
}

HypercomplexTriple resolve_triple(const ModelFile& f, const std::string& name) {
    const auto& names = f.triple(name);
    return HypercomplexTriple(f.complex_structure(names[0]), f.complex_structure(names[1]),
                              f.complex_structure(names[2]));
}

using CheckFn = std::function<void(const ModelFile&, const CheckInvocation&, CheckReport&)>;

void add_form(CheckReport& r, const ModelFile& f, const std::string& label, const Form& value) {
    r.witnesses.emplace_back(label, value.str(f.model.coframe_names));
}

const TwistData& twist_of(const ModelFile& f) {
    if (!f.twist) throw ValidationError("check requires a TWIST section");
    return *f.twist;
}

void check_validate_model(const ModelFile& f, const CheckInvocation&, CheckReport& r) {
    ValidationReport v = validate_model(f.model);
    r.verdict = v.ok() ? Verdict::Pass : Verdict::Fail;
    for (const auto& item : v.items) {
        if (!item.pass) r.witnesses.emplace_back("violated", item.name + " [" + item.witness + "]");
    }
    if (v.ok()) r.witnesses.emplace_back("conditions", std::to_string(v.items.size()));
}

void check_validate_twist_data(const ModelFile& f, const CheckInvocation&, CheckReport& r) {
    ValidationReport v = validate_twist_data(f.model, twist_of(f));
    r.verdict = v.ok() ? Verdict::Pass : Verdict::Fail;
    for (const auto& item : v.items) {
        if (!item.pass) r.witnesses.emplace_back("violated", item.name + " [" + item.witness + "]");
    }
    if (v.ok()) r.witnesses.emplace_back("conditions", std::to_string(v.items.size()));
}

void check_twist_tensor(const ModelFile& f, const CheckInvocation&, CheckReport& r) {
    VectorValuedTwoForm F = twist_tensor(f.model, twist_of(f));
    r.verdict = Verdict::Pass;
    r.witnesses.emplace_back("tensor", F.str(f.model.coframe_names));
}

void check_build_twisted_model(const ModelFile& f, const CheckInvocation&, CheckReport& r) {
    CoframeModel W = build_twisted_model(f.model, twist_of(f));
    r.verdict = Verdict::Pass;
    for (size_t k = 0; k < W.coframe_names.size(); ++k) {
        if (!W.structure[k].is_zero())
            r.witnesses.emplace_back("d_" + W.coframe_names[k],
                                     W.structure[k].str(W.coframe_names));
    }
}

void check_dual_twist_data(const ModelFile& f, const CheckInvocation&, CheckReport& r) {
    const TwistData& T = twist_of(f);
    const CoframeModel& M = f.model;
    CoframeModel W = build_twisted_model(M, T);
    TwistData dual = dual_twist_data(M, T);

    bool ok = validate_twist_data(W, dual).ok();
    r.witnesses.emplace_back("dual_data_valid", ok ? "yes" : "no");

    // zeta . F_W = -d(a^-1) entrywise.
    Matrix A = T.a.inverse();
    bool pairing = true;
    for (size_t i = 0; i < dual.F.size() && pairing; ++i) {
        for (size_t j = 0; j < dual.xi.size() && pairing; ++j) {
            Form lhs = twist_contraction(dual.F[i], dual.xi[j]);
            Form rhs = -exterior_derivative(W, Form(A.at(i, j)));
            pairing = lhs == rhs;
        }
    }
    r.witnesses.emplace_back("zeta_contraction_matches", pairing ? "yes" : "no");

    // Untwisting W recovers d on the coframe and coordinate differentials.
    bool round_trip = true;
    for (int k = 0; k < M.dimension() && round_trip; ++k) {
        Form e = Form::basis({k});
        round_trip = twisted_differential_raw(W, dual, e) == exterior_derivative(M, e);
    }
    for (size_t j = 0; j < M.coordinates.size() && round_trip; ++j) {
        const Form& dx = M.coordinate_differentials[j];
        round_trip = twisted_differential_raw(W, dual, dx) == exterior_derivative(M, dx);
    }
    r.witnesses.emplace_back("round_trip", round_trip ? "yes" : "no");
    r.verdict = (ok && pairing && round_trip) ? Verdict::Pass : Verdict::Fail;
}

void check_twist_integrability(const ModelFile& f, const CheckInvocation& inv, CheckReport& r) {
    std::optional<OrbitData> orbit;
    if (inv.args.size() == 3) {
        orbit = OrbitData{std::stoi(inv.args[1]), std::stoi(inv.args[2])};
    }
    IntegrabilityReport rep =
        twist_integrability(f.model, twist_of(f), f.complex_structure(inv.args[0]), orbit);
    r.verdict = rep.integrable ? Verdict::Pass : Verdict::Fail;
    r.witnesses.emplace_back("obstruction", rep.obstruction.str(f.model.coframe_names));
    if (rep.adapted_basis_verdict)
        r.witnesses.emplace_back("adapted_basis", *rep.adapted_basis_verdict ? "integrable" : "not integrable");
}

void check_nijenhuis(const ModelFile& f, const CheckInvocation& inv, CheckReport& r) {
    VectorValuedTwoForm N = nijenhuis(f.model, f.complex_structure(inv.args[0]));
    r.verdict = N.is_zero() ? Verdict::Pass : Verdict::Fail;
    r.witnesses.emplace_back("nijenhuis", N.str(f.model.coframe_names));
}

void check_kaehler_form(const ModelFile& f, const CheckInvocation& inv, CheckReport& r) {
    Form omega = kaehler_form(f.metric(inv.args[0]), f.complex_structure(inv.args[1]));
    r.verdict = Verdict::Pass;
    add_form(r, f, "omega", omega);
}

void check_bismut_torsion(const ModelFile& f, const CheckInvocation& inv, CheckReport& r) {
    Form c = bismut_torsion(f.model, f.metric(inv.args[0]), f.complex_structure(inv.args[1]));
    r.verdict = Verdict::Pass;
    add_form(r, f, "torsion", c);
}

void check_is_skt(const ModelFile& f, const CheckInvocation& inv, CheckReport& r) {
    SktReport rep = is_skt(f.model, f.metric(inv.args[0]), f.complex_structure(inv.args[1]));
    r.verdict = rep.skt ? Verdict::Pass : Verdict::Fail;
    r.witnesses.emplace_back("integrable", rep.integrable ? "yes" : "no");
    add_form(r, f, "torsion", rep.torsion);
    add_form(r, f, "d_torsion", rep.d_torsion);
}

void check_is_hypercomplex(const ModelFile& f, const CheckInvocation& inv, CheckReport& r) {
    HypercomplexReport rep = is_hypercomplex(f.model, resolve_triple(f, inv.args[0]));
    r.verdict = rep.hypercomplex ? Verdict::Pass : Verdict::Fail;
    for (int k = 0; k < 3; ++k) {
        r.witnesses.emplace_back(std::string("N_") + "IJK"[k],
                                 rep.nijenhuis_zero[k] ? "0" : "nonzero");
    }
}

void check_is_hkt(const ModelFile& f, const CheckInvocation& inv, CheckReport& r) {
    HktReport rep = is_hkt(f.model, f.metric(inv.args[0]), resolve_triple(f, inv.args[1]));
    r.verdict = rep.equal ? Verdict::Pass : Verdict::Fail;
    for (int k = 0; k < 3; ++k) {
        add_form(r, f, std::string(1, "IJK"[k]) + "_d_omega", rep.torsion_candidate[k]);
    }
    r.witnesses.emplace_back("hypercomplex", rep.hypercomplex ? "yes" : "no");
}

void check_hkt_twist_condition(const ModelFile& f, const CheckInvocation& inv, CheckReport& r) {
    HktTwistReport rep = hkt_twist_condition(f.model, twist_of(f), f.metric(inv.args[0]),
                                             resolve_triple(f, inv.args[1]));
    r.verdict = rep.equal ? Verdict::Pass : Verdict::Fail;
    for (int k = 0; k < 3; ++k) {
        add_form(r, f, std::string(1, "IJK"[k]) + "_term", rep.term[k]);
    }
    r.witnesses.emplace_back("twisted_is_hkt", rep.twisted_is_hkt ? "yes" : "no");
}

void check_hypercomplex_twist_condition(const ModelFile& f, const CheckInvocation& inv,
                                        CheckReport& r) {
    HypercomplexTwistReport rep =
        hypercomplex_twist_condition(f.model, twist_of(f), resolve_triple(f, inv.args[0]));
    r.verdict = rep.holds ? Verdict::Pass : Verdict::Fail;
    for (int k = 0; k < 3; ++k) {
        r.witnesses.emplace_back(std::string("fixed_by_") + "IJK"[k],
                                 rep.fixed_by[k] ? "yes" : "no");
    }
    r.witnesses.emplace_back("twisted_is_hypercomplex",
                             rep.twisted_is_hypercomplex ? "yes" : "no");
}

void check_is_instanton(const ModelFile& f, const CheckInvocation& inv, CheckReport& r) {
    bool ok = is_instanton(twist_of(f).F, resolve_triple(f, inv.args[0]));
    r.verdict = ok ? Verdict::Pass : Verdict::Fail;
    r.witnesses.emplace_back("instanton", ok ? "yes" : "no");
}

void check_volume_twist_condition(const ModelFile& f, const CheckInvocation& inv,
                                  CheckReport& r) {
    VolumeTwistReport rep = volume_twist_condition(f.model, twist_of(f),
                                                   f.complex_structure(inv.args[0]),
                                                   f.named_form(inv.args[1]));
    r.verdict = rep.holds ? Verdict::Pass : Verdict::Fail;
    add_form(r, f, "contraction", rep.condition);
    r.witnesses.emplace_back("d_theta_twisted_zero", rep.d_theta_twisted_zero ? "yes" : "no");
    r.witnesses.emplace_back("equivalence_agrees",
                             rep.holds == rep.d_theta_twisted_zero ? "yes" : "no");
}

void check_sl_volume_check(const ModelFile& f, const CheckInvocation& inv, CheckReport& r) {
    SlVolumeReport rep =
        sl_volume_check(f.model, resolve_triple(f, inv.args[0]), f.named_form(inv.args[1]));
    r.verdict = (rep.closed && rep.j_real) ? Verdict::Pass : Verdict::Fail;
    r.witnesses.emplace_back("closed", rep.closed ? "yes" : "no");
    r.witnesses.emplace_back("J_theta_is_conjugate", rep.j_real ? "yes" : "no");
}

const std::map<std::string, CheckFn>& runners() {
    static const std::map<std::string, CheckFn> fns = {
        {"validate_model", check_validate_model},
        {"validate_twist_data", check_validate_twist_data},
        {"twist_tensor", check_twist_tensor},
        {"build_twisted_model", check_build_twisted_model},
        {"dual_twist_data", check_dual_twist_data},
        {"twist_integrability", check_twist_integrability},
        {"nijenhuis", check_nijenhuis},
        {"kaehler_form", check_kaehler_form},
        {"bismut_torsion", check_bismut_torsion},
        {"is_skt", check_is_skt},
        {"is_hypercomplex", check_is_hypercomplex},
        {"is_hkt", check_is_hkt},
        {"hkt_twist_condition", check_hkt_twist_condition},
        {"hypercomplex_twist_condition", check_hypercomplex_twist_condition},
        {"is_instanton", check_is_instanton},
        {"volume_twist_condition", check_volume_twist_condition},
        {"sl_volume_check", check_sl_volume_check},
    };
    return fns;
}

}  // namespace

std::string validate_check_invocation(const ModelFile& f, const CheckInvocation& inv) {
    auto it = catalog().find(inv.name);
    if (it == catalog().end()) return "unknown check '" + inv.name + "'";
    const CheckSpec& spec = it->second;
    size_t required = spec.args.size();
    size_t maximum = required + spec.optional_args.size();
    if (inv.args.size() < required || inv.args.size() > maximum)
        return "check '" + inv.name + "' expects " + std::to_string(required) +
               (maximum > required ? " to " + std::to_string(maximum) : "") + " argument(s)";
    if (inv.args.size() > required && inv.args.size() != maximum)
        return "check '" + inv.name + "' optional arguments must be given together";
    if (spec.needs_twist && !f.twist) return "check '" + inv.name + "' needs a TWIST section";
    for (size_t k = 0; k < inv.args.size(); ++k) {
        ArgKind kind = k < required ? spec.args[k] : spec.optional_args[k - required];
        if (!resolves(f, kind, inv.args[k]))
            return "argument '" + inv.args[k] + "' of check '" + inv.name + "' does not resolve";
    }
    return "";
}

std::vector<CheckReport> run_checks(const ModelFile& f) {
    std::vector<CheckReport> reports;
    for (const auto& inv : f.checks) {
        CheckReport r;
        r.name = inv.name;
        r.args = inv.args;
        auto start = std::chrono::steady_clock::now();
        try {
            auto it = runners().find(inv.name);
            if (it == runners().end()) throw UnknownName("unknown check '" + inv.name + "'");
            it->second(f, inv, r);
        } catch (const std::exception& e) {
            r.verdict = Verdict::Error;
            r.error_message = e.what();
        }
        auto end = std::chrono::steady_clock::now();
        r.micros = std::chrono::duration_cast<std::chrono::microseconds>(end - start).count();
        reports.push_back(std::move(r));
    }
    return reports;
}

namespace {

const char* verdict_str(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Error: return "error";
    }
    return "error";
}

}  // namespace

std::string render_text(const std::vector<CheckReport>& reports, const std::string& filename) {
    std::ostringstream os;
    os << "== " << filename << " ==\n";
    int pass = 0, fail = 0, err = 0;
    for (const auto& r : reports) {
        os << "[" << verdict_str(r.verdict) << "] " << r.name;
        for (const auto& a : r.args) os << " " << a;
        os << " (" << r.micros << " us)\n";
        for (const auto& [label, value] : r.witnesses) {
            os << "    " << label << ": " << value << "\n";
        }
        if (!r.error_message.empty()) os << "    error: " << r.error_message << "\n";
        if (r.verdict == Verdict::Pass) ++pass;
        else if (r.verdict == Verdict::Fail) ++fail;
        else ++err;
    }
    os << pass << " passed, " << fail << " failed, " << err << " errored\n";
    return os.str();
}

std::string render_machine(const std::vector<CheckReport>& reports, const std::string& filename,
                           std::uint64_t seed) {
    std::ostringstream os;
    os << "schema twistkit.report.v1\n";
    os << "seed " << seed << "\n";
    os << "file " << (filename.empty() ? "-" : filename) << "\n";
    int pass = 0, fail = 0, err = 0;
    for (const auto& r : reports) {
        os << "check " << r.name;
        for (const auto& a : r.args) os << " " << a;
        os << "\n";
        os << "verdict " << verdict_str(r.verdict) << "\n";
        for (const auto& [label, value] : r.witnesses) {
            os << "witness " << label << " " << value << "\n";
        }
        if (!r.error_message.empty()) {
            std::string msg = r.error_message;
            for (auto& c : msg) {
                if (c == '\n') c = ';';
            }
            os << "error " << msg << "\n";
        }
        os << "end\n";
        if (r.verdict == Verdict::Pass) ++pass;
        else if (r.verdict == Verdict::Fail) ++fail;
        else ++err;
    }
    os << "summary checks " << reports.size() << " pass " << pass << " fail " << fail
       << " error " << err << "\n";
    return os.str();
}

int exit_code(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports) {
        if (r.verdict != Verdict::Pass) return 1;
    }
    return 0;
}

}  // namespace twistkit
