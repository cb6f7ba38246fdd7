#include "twistkit/twist.hpp"

#include "twistkit/errors.hpp"

namespace twistkit {

Form twist_contraction(const Form& F, const VectorField& xi) {
    // F(., xi) = -interior(xi, F) for a 2-form.
    return -interior(xi, F);
}

namespace {

std::string idx2(size_t j, size_t i) {
    return "[" + std::to_string(j) + "][" + std::to_string(i) + "]";
}

void require_invariant(const CoframeModel& M, const TwistData& T, const Form& alpha) {
    for (const auto& xi : T.xi) {
        if (!lie_derivative(M, xi, alpha).is_zero())
            throw NotInvariant("form is not invariant under the twist action");
    }
}

}  // namespace

ValidationReport validate_twist_data(const CoframeModel& M, const TwistData& T) {
    ValidationReport report;
    const size_t n = T.xi.size();
    const auto& names = M.coframe_names;

    bool square = T.F.size() == n && T.a.rows() == n && T.a.cols() == n;
    report.add("a is square and matches rank", square,
               square ? "" : "expected " + std::to_string(n) + " forms and an n x n matrix");
    if (!square) return report;

    Scalar det = n == 0 ? Scalar(1) : T.a.determinant();
    report.add("a invertible", !det.is_zero(), "det(a) = " + det.str());

    // Lifting equation d a[j][i] = -F^j(., xi_i).
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i < n; ++i) {
            Form lhs = exterior_derivative(M, Form(T.a.at(j, i)));
            Form rhs = -twist_contraction(T.F[j], T.xi[i]);
            bool ok = lhs == rhs;
            report.add("d a" + idx2(j, i) + " = -(xi . F)" + idx2(j, i), ok,
                       ok ? "" : "d a = " + lhs.str(names) + " vs " + rhs.str(names));
        }
    }

    for (size_t j = 0; j < n; ++j) {
        Form dF = exterior_derivative(M, T.F[j]);
        report.add("dF[" + std::to_string(j) + "] = 0", dF.is_zero(),
                   dF.is_zero() ? "" : dF.str(names));
        for (size_t i = 0; i < n; ++i) {
            Form lie = lie_derivative(M, T.xi[i], T.F[j]);
            report.add("L_xi[" + std::to_string(i) + "] F[" + std::to_string(j) + "] = 0",
                       lie.is_zero(), lie.is_zero() ? "" : lie.str(names));
        }
        for (size_t i = 0; i < n; ++i) {
            for (size_t k = 0; k < n; ++k) {
                Scalar v = evaluate_form(T.F[j], {T.xi[i], T.xi[k]});
                if (!v.is_zero()) {
                    report.add("F[" + std::to_string(j) + "](xi, xi) = 0", false,
                               "F(xi_" + std::to_string(i) + ", xi_" + std::to_string(k) +
                                   ") = " + v.str());
                }
            }
        }
    }
    report.add("F(xi, xi) = 0", true);

    bool commute = true;
    std::string witness;
    for (size_t i = 0; i < n && commute; ++i) {
        for (size_t k = i + 1; k < n && commute; ++k) {
            VectorField br = lie_bracket(M, T.xi[i], T.xi[k]);
            if (!br.is_zero()) {
                commute = false;
                witness = "[xi_" + std::to_string(i) + ", xi_" + std::to_string(k) +
                          "] = " + br.str(names);
            }
        }
    }
    report.add("xi fields commute", commute, witness);

    for (size_t m = 0; m < M.coordinates.size(); ++m) {
        for (size_t i = 0; i < n; ++i) {
            Scalar v = M.coordinate_pairing(static_cast<int>(m), T.xi[i]);
            report.add("d" + M.coordinates[m] + "(xi_" + std::to_string(i) + ") = 0", v.is_zero(),
                       v.is_zero() ? "" : v.str());
        }
    }
    return report;
}

VectorValuedTwoForm twist_tensor(const CoframeModel& M, const TwistData& T) {
    Matrix A = T.a.inverse();
    VectorValuedTwoForm out(M.dimension());
    for (size_t i = 0; i < T.xi.size(); ++i) {
        for (size_t j = 0; j < T.F.size(); ++j) {
            const Scalar& w = A.at(i, j);
            if (w.is_zero()) continue;
            for (const auto& [a, c] : T.xi[i].components) {
                out.comp.at(static_cast<size_t>(a)) += T.F[j].scaled(w * c);
            }
        }
    }
    return out;
}

Form twisted_differential_raw(const CoframeModel& M, const TwistData& T, const Form& alpha) {
    Form out = exterior_derivative(M, alpha);
    if (alpha.degree() == 0) return out;
    Matrix A = T.a.inverse();
    for (size_t i = 0; i < T.xi.size(); ++i) {
        Form contraction = interior(T.xi[i], alpha);
        if (contraction.is_zero()) continue;
        for (size_t j = 0; j < T.F.size(); ++j) {
            const Scalar& w = A.at(i, j);
            if (w.is_zero()) continue;
            out -= wedge(T.F[j], contraction).scaled(w);
        }
    }
    return out;
}

Form twisted_differential(const CoframeModel& M, const TwistData& T, const Form& alpha) {
    require_invariant(M, T, alpha);
    return twisted_differential_raw(M, T, alpha);
}

VectorField twisted_bracket(const CoframeModel& M, const TwistData& T, const VectorField& X,
                            const VectorField& Y) {
    for (const auto& xi : T.xi) {
        if (!lie_bracket(M, xi, X).is_zero() || !lie_bracket(M, xi, Y).is_zero())
            throw NotInvariant("twisted bracket requires xi-invariant vector fields");
    }
    VectorField out = lie_bracket(M, X, Y);
    Matrix A = T.a.inverse();
    for (size_t i = 0; i < T.xi.size(); ++i) {
        for (size_t j = 0; j < T.F.size(); ++j) {
            const Scalar& w = A.at(i, j);
            if (w.is_zero()) continue;
            Scalar v = evaluate_form(T.F[j], {X, Y});
            if (v.is_zero()) continue;
            out = out - T.xi[i].scaled(w * v);
        }
    }
    return out;
}

CoframeModel build_twisted_model(const CoframeModel& M, const TwistData& T) {
    ValidationReport check = validate_twist_data(M, T);
    if (!check.ok()) throw ValidationError("invalid twist data:\n" + check.summary());
    CoframeModel W = M;
    for (int i = 0; i < M.dimension(); ++i) {
        W.structure[static_cast<size_t>(i)] = twisted_differential(M, T, Form::basis({i}));
    }
    ValidationReport out_check = validate_model(W);
    if (!out_check.ok()) throw ValidationError("twisted model fails d^2 = 0:\n" + out_check.summary());
    return W;
}

TwistData dual_twist_data(const CoframeModel& M, const TwistData& T) {
    ValidationReport check = validate_twist_data(M, T);
    if (!check.ok()) throw ValidationError("invalid twist data:\n" + check.summary());
    Matrix A = T.a.inverse();
    const size_t n = T.xi.size();
    TwistData dual;
    dual.a = A;
    // zeta_j = -sum_i A[i][j] xi_i.
    for (size_t j = 0; j < n; ++j) {
        VectorField zeta;
        for (size_t i = 0; i < n; ++i) {
            zeta = zeta + T.xi[i].scaled(-A.at(i, j));
        }
        dual.xi.push_back(zeta);
    }
    // F_W[i] = sum_j A[i][j] F[j].
    for (size_t i = 0; i < n; ++i) {
        Form fw(2);
        for (size_t j = 0; j < n; ++j) {
            fw += T.F[j].scaled(A.at(i, j));
        }
        dual.F.push_back(fw);
    }
    return dual;
}

VectorValuedTwoForm structure_action(const CoframeModel& M, const AlmostComplexStructure& J,
                                     const VectorValuedTwoForm& T) {
    const size_t n = T.comp.size();
    VectorValuedTwoForm out(static_cast<int>(n));
    // J_{(23)}: both form slots; J_{(12)} + J_{(13)}: frame slot times the
    // derivation sum on the form slots.
    for (size_t b = 0; b < n; ++b) {
        out.comp[b] = apply_all(J, T.comp[b]);
        for (size_t a = 0; a < n; ++a) {
            const Scalar& w = J.matrix().at(b, a);
            if (w.is_zero()) continue;
            out.comp[b] += slot_sum(J, T.comp[a]).scaled(w);
        }
    }
    (void)M;
    return out;
}

IntegrabilityReport twist_integrability(const CoframeModel& M, const TwistData& T,
                                        const AlmostComplexStructure& J,
                                        const std::optional<OrbitData>& orbit) {
    if (!nijenhuis(M, J).is_zero())
        throw NotIntegrable("twist_integrability requires an integrable base structure");
    for (const auto& xi : T.xi) {
        if (!preserves_structure(M, xi, J))
            throw NotInvariant("xi does not preserve the complex structure");
    }
    IntegrabilityReport report{VectorValuedTwoForm(M.dimension()), false, std::nullopt};
    VectorValuedTwoForm F = twist_tensor(M, T);
    report.obstruction = F - structure_action(M, J, F);
    report.integrable = report.obstruction.is_zero();

    if (orbit) {
        Matrix A = T.a.inverse();
        const size_t n = T.xi.size();
        std::vector<Form> G(n, Form(2));
        for (size_t k = 0; k < n; ++k) {
            for (size_t j = 0; j < n; ++j) G[k] += T.F[j].scaled(A.at(k, j));
        }
        bool ok = true;
        for (int j = 1; j <= orbit->s; ++j) {
            Form fc = G[static_cast<size_t>(2 * j - 2)] +
                      G[static_cast<size_t>(2 * j - 1)].scaled(Scalar::i());
            if (!type_component(J, fc, 0, 2).is_zero()) ok = false;
        }
        for (int k = 2 * orbit->s; k < orbit->r; ++k) {
            const Form& f = G[static_cast<size_t>(k)];
            if (type_component(J, f, 1, 1) != f) ok = false;
        }
        report.adapted_basis_verdict = ok;
        if (ok != report.integrable)
            throw Error("adapted-basis criterion disagrees with (1 - L_J)F");
    }
    return report;
}

Form kt_torsion_transfer(const CoframeModel& M, const TwistData& T, const HermitianMetric& g,
                         const AlmostComplexStructure& J) {
    Form c = bismut_torsion(M, g, J);
    Matrix A = T.a.inverse();
    for (size_t i = 0; i < T.xi.size(); ++i) {
        Form flat = g.flat(T.xi[i]);
        for (size_t j = 0; j < T.F.size(); ++j) {
            const Scalar& w = A.at(i, j);
            if (w.is_zero()) continue;
            c -= wedge(apply_all(J, T.F[j]), flat).scaled(w);
        }
    }
    return c;
}

Form dc_transfer(const CoframeModel& M, const TwistData& T, const HermitianMetric& g,
                 const AlmostComplexStructure& J) {
    const size_t n = T.xi.size();
    Matrix A = T.a.inverse();
    Form c = bismut_torsion(M, g, J);
    Form out = exterior_derivative(M, c);

    std::vector<Form> JF, flats, dflats;
    for (size_t j = 0; j < n; ++j) JF.push_back(apply_all(J, T.F[j]));
    for (size_t i = 0; i < n; ++i) {
        flats.push_back(g.flat(T.xi[i]));
        dflats.push_back(exterior_derivative(M, flats.back()));
    }

    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            const Scalar& w = A.at(i, j);
            if (w.is_zero()) continue;
            out -= wedge(T.F[j], interior(T.xi[i], c)).scaled(w);
            out -= wedge(exterior_derivative(M, JF[j]), flats[i]).scaled(w);
            out -= wedge(JF[j], dflats[i]).scaled(w);
        }
    }

    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            for (size_t k = 0; k < n; ++k) {
                for (size_t l = 0; l < n; ++l) {
                    // g(xi_i, xi_k) F^l ^ JF^j
                    Scalar w1 = A.at(k, l) * A.at(i, j) * g.inner(T.xi[i], T.xi[k]);
                    if (!w1.is_zero()) out += wedge(T.F[l], JF[j]).scaled(w1);
                    // F^l ^ (i_{xi_k} JF^j) ^ xi_i^flat
                    Scalar w2 = A.at(k, l) * A.at(i, j);
                    if (!w2.is_zero()) {
                        Form inner = interior(T.xi[k], JF[j]);
                        if (!inner.is_zero())
                            out += wedge(wedge(T.F[l], inner), flats[i]).scaled(w2);
                    }
                    // (i_{xi_k} F^l) ^ JF^j ^ xi_i^flat
                    Scalar w3 = A.at(i, l) * A.at(k, j);
                    if (!w3.is_zero()) {
                        Form inner = interior(T.xi[k], T.F[l]);
                        if (!inner.is_zero())
                            out += wedge(wedge(inner, JF[j]), flats[i]).scaled(w3);
                    }
                }
            }
        }
    }
    return out;
}

Form dc_transfer_instanton(const CoframeModel& M, const TwistData& T, const HermitianMetric& g,
                           const AlmostComplexStructure& J) {
    const size_t n = T.xi.size();
    Matrix A = T.a.inverse();
    Form c = bismut_torsion(M, g, J);
    Form out = exterior_derivative(M, c);
    for (size_t i = 0; i < n; ++i) {
        Form flat = g.flat(T.xi[i]);
        Form dflat = exterior_derivative(M, flat);
        for (size_t j = 0; j < n; ++j) {
            const Scalar& w = A.at(i, j);
            if (w.is_zero()) continue;
            out -= wedge(T.F[j], interior(T.xi[i], c)).scaled(w);
            out -= wedge(T.F[j], dflat).scaled(w);
            for (size_t k = 0; k < n; ++k) {
                for (size_t l = 0; l < n; ++l) {
                    Scalar w2 = w * A.at(k, l) * g.inner(T.xi[i], T.xi[k]);
                    if (!w2.is_zero()) out += wedge(T.F[j], T.F[l]).scaled(w2);
                }
            }
        }
    }
    return out;
}

}  // namespace twistkit
