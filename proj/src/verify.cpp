#include "borelred/verify.hpp"

#include <algorithm>
#include <sstream>

#include "borelred/borel_action.hpp"
#include "borelred/idempotents.hpp"
#include "borelred/invariants.hpp"
#include "borelred/symbolic_order.hpp"

namespace borelred {

bool VerificationReport::all_pass() const {
    for (const auto& [name, tally] : laws) {
        if (tally.failed != 0) return false;
    }
    return true;
}

Json VerificationReport::to_json() const {
    Json out;
    out["suite"] = suite;
    out["n_min"] = n_min;
    out["n_max"] = n_max;
    out["seed"] = seed;
    out["trials"] = trials;
    Json laws_json;
    for (const auto& [name, tally] : laws) {
        Json t;
        t["pass"] = tally.passed;
        t["fail"] = tally.failed;
        laws_json[name] = std::move(t);
    }
    out["laws"] = std::move(laws_json);
    if (counterexample) {
        Json ce;
        ce["law"] = counterexample->law;
        ce["n"] = counterexample->n;
        ce["instance_seed"] = counterexample->instance_seed;
        ce["detail"] = counterexample->detail;
        out["counterexample"] = std::move(ce);
    } else {
        out["counterexample"] = nullptr;
    }
    return out;
}

std::string VerificationReport::text() const {
    std::ostringstream os;
    os << "suite: " << suite << "   n = " << n_min << ".." << n_max << "   trials/law = "
       << trials << "   seed = " << seed << "\n";
    for (const auto& [name, tally] : laws) {
        os << "  " << name;
        for (std::size_t pad = name.size(); pad < 36; ++pad) os << ' ';
        os << tally.passed << " pass   " << tally.failed << " fail\n";
    }
    if (counterexample) {
        os << "  first counterexample: law " << counterexample->law << ", n = "
           << counterexample->n << ", instance seed " << counterexample->instance_seed << "\n";
    }
    os << "result: " << (all_pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

namespace {

/// Records the verdict of every law of one trial and merges into the report.
class Trial {
public:
    Trial(VerificationReport& rep, int n, std::uint64_t instance_seed)
        : rep_(rep), n_(n), instance_seed_(instance_seed) {}

    void law(const std::string& name, const std::function<bool()>& eval,
             const std::function<Json()>& context) {
        bool ok = false;
        Json detail;
        try {
            ok = eval();
            if (!ok) detail = context();
        } catch (const std::exception& e) {
            ok = false;
            detail = context();
            detail["error"] = e.what();
        }
        verdicts_[name] = ok;
        auto& tally = rep_.laws[name];
        if (ok) {
            ++tally.passed;
        } else {
            ++tally.failed;
            if (!rep_.counterexample) {
                rep_.counterexample = Counterexample{name, n_, instance_seed_, detail};
            }
        }
    }

    /// Tallies a failure for every declared law this trial never reached
    /// (shared setup threw before the laws could run).
    void fail_missing(const std::vector<std::string>& declared, const std::string& error) {
        for (const std::string& name : declared) {
            if (!verdicts_.contains(name)) {
                Json detail;
                detail["error"] = error;
                law(name, [] { return false; }, [&] { return detail; });
            }
        }
    }

    Json per_trial_json() const {
        Json out;
        out["n"] = n_;
        out["seed"] = instance_seed_;
        Json laws;
        for (const auto& [name, ok] : verdicts_) laws[name] = ok ? "pass" : "fail";
        out["laws"] = std::move(laws);
        return out;
    }

    const std::map<std::string, bool>& verdicts() const { return verdicts_; }

private:
    VerificationReport& rep_;
    int n_;
    std::uint64_t instance_seed_;
    std::map<std::string, bool> verdicts_;
};

Json quad_context(const Quad& q) {
    Json out;
    out["instance"] = quadruple_to_json(q);
    return out;
}

bool matrices_equal(const Matrix<Rational>& a, const Matrix<Rational>& b) { return a == b; }

// ---------------------------------------------------------------- idempotents

void trial_idempotents(Trial& t, int n, std::uint64_t iseed, int mc) {
    SplitMix64 rng(iseed);
    const BorelMatrix<Rational> r = random_rss_borel(rng, n, mc);
    const DualBorelMatrix<Rational> s = random_dual_borel(rng, n, mc);
    const BorelMatrix<Rational> d = random_invertible_borel(rng, n, mc);
    const Rational c = random_nonzero_rational(rng, mc);
    const std::vector<Idempotent<Rational>> fam = idempotent_family(r);
    const Matrix<Rational> zero(n);
    const auto ctx = [&] {
        Json out;
        out["r"] = matrix_to_json(r.matrix());
        return out;
    };

    t.law("orthogonality", [&] {
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if (a != b && !(fam[a].m * fam[b].m == zero)) return false;
            }
        }
        return true;
    }, ctx);

    t.law("idempotence", [&] {
        return std::all_of(fam.begin(), fam.end(),
                           [](const auto& L) { return L.m * L.m == L.m; });
    }, ctx);

    t.law("unit_trace", [&] {
        return std::all_of(fam.begin(), fam.end(),
                           [](const auto& L) { return L.m.trace() == Rational(1); });
    }, ctx);

    t.law("sum_identity", [&] {
        Matrix<Rational> sum(n);
        for (const auto& L : fam) sum = sum + L.m;
        return sum == Matrix<Rational>::identity(n);
    }, ctx);

    t.law("vanishing_pattern", [&] {
        for (int iota = 0; iota < n; ++iota) {
            for (int g = 0; g < n; ++g) {
                for (int m = 0; m < n; ++m) {
                    if ((g > iota || m < iota) && !fam[iota].m(g, m).is_zero()) return false;
                }
            }
        }
        return true;
    }, ctx);

    t.law("commutes_with_r", [&] {
        for (int iota = 0; iota < n; ++iota) {
            const Matrix<Rational> lr = fam[iota].m * r.matrix();
            if (!(lr == r.matrix() * fam[iota].m)) return false;
            for (int g = 0; g < n; ++g) {
                for (int m = 0; m < n; ++m) {
                    if ((m < iota || g > iota) && !lr(g, m).is_zero()) return false;
                }
            }
        }
        return true;
    }, ctx);

    t.law("diagonal_product_rule", [&] {
        for (int iota = 0; iota < n; ++iota) {
            const Matrix<Rational> lr = fam[iota].m * r.matrix();
            for (int g = 0; g < n; ++g) {
                if (!(lr(g, g) == r(iota, iota) * fam[iota].m(g, g))) return false;
            }
        }
        return true;
    }, ctx);

    t.law("kills_lower_dual_rows", [&] {
        for (int iota = 0; iota < n; ++iota) {
            const Matrix<Rational> ls = fam[iota].m * s.matrix();
            for (int g = iota + 1; g < n; ++g) {
                for (int m = 0; m < n; ++m) {
                    if (!ls(g, m).is_zero()) return false;
                }
            }
        }
        return true;
    }, ctx);

    t.law("conjugation_equivariance", [&] {
        const Matrix<Rational> dinv = upper_triangular_inverse(d.matrix());
        const BorelMatrix<Rational> rd(d.matrix() * r.matrix() * dinv);
        for (int iota = 0; iota < n; ++iota) {
            const Idempotent<Rational> Ld = idempotent(rd, iota);
            if (!(Ld.m == d.matrix() * fam[iota].m * dinv)) return false;
        }
        return true;
    }, ctx);

    t.law("scale_invariance", [&] {
        const BorelMatrix<Rational> rc(r.matrix().scaled(c));
        for (int iota = 0; iota < n; ++iota) {
            if (!(idempotent(rc, iota).m == fam[iota].m)) return false;
        }
        return true;
    }, ctx);

    t.law("closed_form_row", [&] {
        for (int iota = 0; iota < n; ++iota) {
            for (int g = iota; g < n; ++g) {
                if (!(idempotent_row_entry_closed_form(r, iota, g) == fam[iota].m(iota, g))) {
                    return false;
                }
            }
        }
        return true;
    }, ctx);

    t.law("product_order_irrelevant", [&] {
        for (int iota = 0; iota < n; ++iota) {
            Matrix<Rational> prod = Matrix<Rational>::identity(n);
            for (int k = n - 1; k >= 0; --k) { // descending, against the fixed order
                if (k == iota) continue;
                Matrix<Rational> f = r.matrix();
                for (int dd = 0; dd < n; ++dd) f(dd, dd) -= r(k, k);
                prod = prod * f;
            }
            if (!(prod.scaled(idempotent_normalizer(r, iota).inverse()) == fam[iota].m)) {
                return false;
            }
        }
        return true;
    }, ctx);
}

// ---------------------------------------------------------------- diagonalize

void trial_diagonalize(Trial& t, int n, std::uint64_t iseed, int mc) {
    SplitMix64 rng(iseed);
    const BorelMatrix<Rational> r = random_rss_borel(rng, n, mc);
    const DualBorelMatrix<Rational> s = random_dual_borel(rng, n, mc);
    const std::vector<Rational> d = random_invertible_diagonal(rng, n, mc);
    const BorelMatrix<Rational> b1 = random_invertible_borel(rng, n, mc);
    const BorelMatrix<Rational> b2 = random_invertible_borel(rng, n, mc);
    const Quad q = generate_instance(n, rng.next(), GenMode::Free, mc);
    const Matrix<Rational> diag_r = Matrix<Rational>::diagonal(r.matrix().diagonal_entries());
    const auto ctx = [&] {
        Json out;
        out["r"] = matrix_to_json(r.matrix());
        return out;
    };

    const auto [bu, bu_inv] = diagonalizing_borel(r);
    const auto [bd, bd_inv] = diagonalizing_borel(r, d);

    t.law("inverse_identity", [&] {
        return bu.matrix() * bu_inv.matrix() == Matrix<Rational>::identity(n);
    }, ctx);

    t.law("diagonalizes", [&] {
        return bu.matrix() * r.matrix() * bu_inv.matrix() == diag_r;
    }, ctx);

    t.law("inverse_identity_random_d", [&] {
        return bd.matrix() * bd_inv.matrix() == Matrix<Rational>::identity(n);
    }, ctx);

    t.law("diagonalizes_random_d", [&] {
        return bd.matrix() * r.matrix() * bd_inv.matrix() == diag_r;
    }, ctx);

    t.law("conjugation_independent_of_d", [&] {
        return matrices_equal(bd.matrix() * r.matrix() * bd_inv.matrix(),
                              bu.matrix() * r.matrix() * bu_inv.matrix());
    }, ctx);

    t.law("dual_diagonal_formula", [&] {
        const DualBorelMatrix<Rational> acted =
            project_to_dual(bd.matrix() * s.matrix() * bd_inv.matrix());
        for (int iota = 0; iota < n; ++iota) {
            const Idempotent<Rational> L = idempotent(r, iota);
            if (!(acted(iota, iota) == (L.m * s.matrix()).trace())) return false;
        }
        return true;
    }, ctx);

    t.law("diag_fixed_by_action", [&] {
        const Matrix<Rational> binv = upper_triangular_inverse(b2.matrix());
        const Matrix<Rational> conj = b2.matrix() * r.matrix() * binv;
        return conj.diagonal_entries() == r.matrix().diagonal_entries();
    }, ctx);

    t.law("diagonal_dual_fixed", [&] {
        const Matrix<Rational> ds = Matrix<Rational>::diagonal(s.matrix().diagonal_entries());
        const Matrix<Rational> binv = upper_triangular_inverse(b2.matrix());
        return project_to_dual(b2.matrix() * ds * binv).matrix() == ds;
    }, ctx);

    t.law("action_identity", [&] {
        return borel_act(BorelMatrix<Rational>(Matrix<Rational>::identity(n)), q) == q;
    }, [&] { return quad_context(q); });

    t.law("action_compatibility", [&] {
        const Quad lhs = borel_act(b2, borel_act(b1, q));
        const Quad rhs = borel_act(BorelMatrix<Rational>(b2.matrix() * b1.matrix()), q);
        return lhs == rhs;
    }, [&] { return quad_context(q); });
}

// ----------------------------------------------------------------- invariance

void trial_invariance(Trial& t, int n, std::uint64_t iseed, int mc) {
    SplitMix64 rng(iseed);
    const Quad q = generate_instance(n, rng.next(), GenMode::Free, mc);
    const Quad qf = generate_instance(n, rng.next(), GenMode::Fiber, mc);
    std::vector<BorelMatrix<Rational>> bs;
    for (int k = 0; k < 10; ++k) bs.push_back(random_invertible_borel(rng, n, mc));
    const InvariantVector base = invariant_vector(q);
    const auto ctx = [&] { return quad_context(q); };

    t.law("F_invariant", [&] {
        for (const auto& b : bs) {
            const Quad bq = borel_act(b, q);
            for (int iota = 0; iota < n; ++iota) {
                if (!(invariant_F(bq, iota) == base.F[static_cast<std::size_t>(iota)])) return false;
            }
        }
        return true;
    }, ctx);

    t.law("G_invariant", [&] {
        for (const auto& b : bs) {
            const Quad bq = borel_act(b, q);
            for (int iota = 0; iota < n; ++iota) {
                if (!(invariant_G(bq, iota) == base.G[static_cast<std::size_t>(iota)])) return false;
            }
        }
        return true;
    }, ctx);

    t.law("H_invariant", [&] {
        for (const auto& b : bs) {
            const Quad bq = borel_act(b, q);
            for (int iota = 0; iota < n; ++iota) {
                if (!(invariant_H(bq, iota) == base.H[static_cast<std::size_t>(iota)])) return false;
            }
        }
        return true;
    }, ctx);

    t.law("K_invariant", [&] {
        for (const auto& b : bs) {
            const Quad bq = borel_act(b, q);
            for (int g = 0; g < n; ++g) {
                for (int nu = g + 1; nu < n; ++nu) {
                    if (!(invariant_K(bq, g, nu) == base.k(g, nu))) return false;
                }
            }
        }
        return true;
    }, ctx);

    t.law("H_equals_diagonal", [&] {
        for (int iota = 0; iota < n; ++iota) {
            if (!(base.H[static_cast<std::size_t>(iota)] == q.r(iota, iota))) return false;
        }
        return true;
    }, ctx);

    t.law("K_equals_difference_inverse", [&] {
        for (int g = 0; g < n; ++g) {
            for (int nu = g + 1; nu < n; ++nu) {
                if (!(base.k(g, nu) == (q.r(nu, nu) - q.r(g, g)).inverse())) return false;
                if (!(base.k(nu, g) == -base.k(g, nu))) return false;
            }
        }
        return true;
    }, ctx);

    t.law("K_times_H_difference", [&] {
        for (int g = 0; g < n; ++g) {
            for (int nu = g + 1; nu < n; ++nu) {
                const Rational prod = base.k(g, nu) *
                    (base.H[static_cast<std::size_t>(nu)] - base.H[static_cast<std::size_t>(g)]);
                if (!prod.is_one()) return false;
            }
        }
        return true;
    }, ctx);

    t.law("G_of_diagonal_s", [&] {
        SplitMix64 sub(iseed ^ 0x600dULL);
        const std::vector<Rational> diag = random_vector(sub, n, mc);
        const Quad qd(q.r, DualBorelMatrix<Rational>(Matrix<Rational>::diagonal(diag)), q.i, q.j);
        for (int iota = 0; iota < n; ++iota) {
            if (!(invariant_G(qd, iota) == diag[static_cast<std::size_t>(iota)])) return false;
        }
        return true;
    }, ctx);

    t.law("trace_form_agreement", [&] {
        for (int iota = 0; iota < n; ++iota) {
            if (!(invariant_F_trace_form(q, iota) == base.F[static_cast<std::size_t>(iota)])) return false;
            if (!(invariant_G_trace_form(q, iota) == base.G[static_cast<std::size_t>(iota)])) return false;
            if (!(invariant_H_trace_form(q, iota) == base.H[static_cast<std::size_t>(iota)])) return false;
        }
        return true;
    }, ctx);

    t.law("witness_roundtrip_diagonal", [&] {
        SplitMix64 sub(iseed ^ 0x7a11ULL);
        const TargetPoint target = random_target(sub, n, mc);
        return quotient_map(surjectivity_witness(target)) == target;
    }, ctx);

    t.law("witness_roundtrip_generic", [&] {
        SplitMix64 sub(iseed ^ 0x7a12ULL);
        const TargetPoint target = random_target(sub, n, mc);
        const Quad w = surjectivity_witness(target, WitnessMode::Generic, sub.next(), mc);
        return in_zero_fiber_rss(w) && quotient_map(w) == target;
    }, ctx);

    t.law("separation", [&] {
        SplitMix64 sub(iseed ^ 0x5e9aULL);
        const TargetPoint t1 = random_target(sub, n, mc);
        TargetPoint t2 = random_target(sub, n, mc);
        if (t1 == t2) return true; // same representative, nothing to separate
        const Quad q1 = surjectivity_witness(t1);
        const Quad q2 = surjectivity_witness(t2);
        return !(quotient_map(q1) == quotient_map(q2));
    }, ctx);

    t.law("quotient_constant_on_orbit", [&] {
        const TargetPoint base_target = quotient_map(qf);
        for (const auto& b : bs) {
            if (!(quotient_map(borel_act(b, qf)) == base_target)) return false;
        }
        return true;
    }, [&] { return quad_context(qf); });
}

// --------------------------------------------------------------------- limits

void trial_limits(Trial& t, int n, std::uint64_t iseed, int mc) {
    SplitMix64 rng(iseed);
    const Quad qf = generate_instance(n, rng.next(), GenMode::Fiber, mc);
    const BorelMatrix<Rational> b = random_invertible_borel(rng, n, mc);
    const OrbitLimit ol = orbit_limit(qf);
    const auto ctx = [&] { return quad_context(qf); };

    t.law("nonnegative_weights", [&] {
        for (int a = 0; a < n; ++a) {
            for (int c = 0; c < n; ++c) {
                const LaurentPoly& re = ol.curve.r.matrix()(a, c);
                const LaurentPoly& se = ol.curve.s.matrix()(a, c);
                if (!re.is_zero() && re.min_exponent() < 0) return false;
                if (!se.is_zero() && se.min_exponent() < 0) return false;
            }
        }
        for (int k = 0; k < n; ++k) {
            const LaurentPoly& ie = ol.curve.i[static_cast<std::size_t>(k)];
            const LaurentPoly& je = ol.curve.j[static_cast<std::size_t>(k)];
            if (!ie.is_zero() && ie.min_exponent() < 0) return false;
            if (!je.is_zero() && je.min_exponent() < 0) return false;
        }
        return true;
    }, ctx);

    t.law("limit_form", [&] {
        if (!is_zero_vector(ol.point.i) || !is_zero_vector(ol.point.j)) return false;
        if (!(ol.point.r.matrix() ==
              Matrix<Rational>::diagonal(qf.r.matrix().diagonal_entries()))) return false;
        if (!ol.point.s.matrix().is_diagonal()) return false;
        for (int iota = 0; iota < n; ++iota) {
            if (!(ol.point.s(iota, iota) == invariant_G(qf, iota))) return false;
        }
        return true;
    }, ctx);

    t.law("limit_fixed_by_lambda", [&] {
        const LaurentQuad acted = one_param_act(ol.lambda, ol.point);
        return acted == to_laurent(ol.point);
    }, ctx);

    t.law("limit_is_idempotent", [&] {
        return orbit_limit(ol.point).point == ol.point;
    }, ctx);

    t.law("orbit_invariance", [&] {
        return orbit_limit(borel_act(b, qf)).point == ol.point;
    }, ctx);

    t.law("quotient_constant_under_limit", [&] {
        return quotient_map(ol.point) == quotient_map(qf);
    }, ctx);

    t.law("recipe_exponents", [&] {
        const auto [bb, bb_inv] = diagonalizing_borel(qf.r);
        const Quad diag = borel_act(bb, qf);
        const OneParamSubgroup expect = limit_exponents(diag.i, diag.j);
        if (!(ol.lambda == expect)) return false;
        return std::all_of(ol.lambda.exponents.begin(), ol.lambda.exponents.end(),
                           [](int a) { return a >= -1 && a <= 1; });
    }, ctx);

    t.law("diagonal_weight_zero", [&] {
        for (int k = 0; k < n; ++k) {
            if (!ol.curve.s.matrix()(k, k).is_constant()) return false;
        }
        return true;
    }, ctx);

    t.law("closed_orbit_commutes", [&] {
        const Matrix<Rational>& rl = ol.point.r.matrix();
        const Matrix<Rational>& sl = ol.point.s.matrix();
        return project_to_dual(rl * sl - sl * rl).is_zero();
    }, ctx);
}

// --------------------------------------------------------------------- solver

void trial_solver(Trial& t, int n, std::uint64_t iseed, int mc) {
    SplitMix64 rng(iseed);
    const BorelMatrix<Rational> r = random_rss_borel(rng, n, mc);
    const std::vector<Rational> i = random_vector(rng, n, mc);
    const std::vector<Rational> j = random_vector(rng, n, mc);
    const std::vector<Rational> diag_s = random_vector(rng, n, mc);
    const std::vector<Rational> diag_s2 = random_vector(rng, n, mc);
    const std::vector<Rational> zero(static_cast<std::size_t>(n), Rational(0));
    const BorelMatrix<Rational> b = random_invertible_borel(rng, n, mc);
    const Quad qf = generate_instance(n, rng.next(), GenMode::Fiber, mc);
    const DualBorelMatrix<Rational> s = solve_subdiagonal_s(r, i, j, diag_s);
    const Quad solved(r, s, i, j);
    const auto ctx = [&] { return quad_context(solved); };

    t.law("offdiagonal_eliminated", [&] {
        const DualBorelMatrix<Rational> mu = moment(solved);
        for (int a = 0; a < n; ++a) {
            for (int c = 0; c < a; ++c) {
                if (!mu(a, c).is_zero()) return false;
            }
        }
        return true;
    }, ctx);

    t.law("diagonal_equals_trace_form", [&] {
        const DualBorelMatrix<Rational> mu = moment(solved);
        for (int iota = 0; iota < n; ++iota) {
            if (!(mu(iota, iota) == invariant_F(solved, iota))) return false;
        }
        return true;
    }, ctx);

    t.law("diag_s_independence", [&] {
        const DualBorelMatrix<Rational> s2 = solve_subdiagonal_s(r, i, j, diag_s2);
        for (int a = 0; a < n; ++a) {
            for (int c = 0; c < a; ++c) {
                if (!(s2(a, c) == s(a, c))) return false;
            }
        }
        return true;
    }, ctx);

    t.law("i_zero_gives_diagonal", [&] {
        return solve_subdiagonal_s(r, zero, j, diag_s).matrix().is_diagonal();
    }, ctx);

    t.law("j_zero_gives_diagonal", [&] {
        return solve_subdiagonal_s(r, i, zero, diag_s).matrix().is_diagonal();
    }, ctx);

    t.law("moment_equivariance", [&] {
        const Matrix<Rational> binv = upper_triangular_inverse(b.matrix());
        const DualBorelMatrix<Rational> lhs = moment(borel_act(b, solved));
        const DualBorelMatrix<Rational> rhs =
            project_to_dual(b.matrix() * moment(solved).matrix() * binv);
        return lhs == rhs;
    }, ctx);

    t.law("fiber_preserved_by_action", [&] {
        return in_zero_fiber_rss(qf) && in_zero_fiber_rss(borel_act(b, qf));
    }, [&] { return quad_context(qf); });

    t.law("jacobian_full_rank", [&] {
        const Quad qg = generate_generic_fiber_instance(n, iseed ^ 0x6a61ULL, mc);
        return matrix_rank(moment_diagonal_jacobian(qg)) == n;
    }, [&] { return quad_context(qf); });
}

// ------------------------------------------------------------------- symbolic

XYMonomial random_xy_monomial(SplitMix64& rng, int n, int max_exp) {
    XYMonomial m(n);
    for (int k = 0; k < n; ++k) {
        m.xe[static_cast<std::size_t>(k)] = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_exp + 1)));
        m.ye[static_cast<std::size_t>(k)] = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_exp + 1)));
    }
    return m;
}

void trial_symbolic(Trial& t, int n, std::uint64_t iseed, int mc,
                    const std::vector<SymbolicBilinear>& expansions) {
    SplitMix64 rng(iseed);
    const XYMonomial m1 = random_xy_monomial(rng, n, 3);
    const XYMonomial m2 = random_xy_monomial(rng, n, 3);
    const XYMonomial m3 = random_xy_monomial(rng, n, 3);
    const auto ctx = [&] {
        Json out;
        out["monomials"] = Json::array({m1.str(), m2.str(), m3.str()});
        return out;
    };

    t.law("order_total", [&] {
        const auto ab = xy_order(m1, m2);
        const auto ba = xy_order(m2, m1);
        if ((ab == std::strong_ordering::equal) != (m1 == m2)) return false;
        if ((ab == std::strong_ordering::less) != (ba == std::strong_ordering::greater)) return false;
        // transitivity on the sorted triple
        const XYMonomial* lo = &m1;
        const XYMonomial* mid = &m2;
        const XYMonomial* hi = &m3;
        auto ord = [](const XYMonomial*& a, const XYMonomial*& b) {
            if (xy_greater(*a, *b)) std::swap(a, b);
        };
        ord(lo, mid); ord(mid, hi); ord(lo, mid);
        return !xy_greater(*lo, *hi);
    }, ctx);

    t.law("order_multiplicative", [&] {
        if (xy_order(m1, m2) == std::strong_ordering::equal) return true;
        const XYMonomial big = xy_greater(m1, m2) ? m1 : m2;
        const XYMonomial small = xy_greater(m1, m2) ? m2 : m1;
        return xy_greater(big * m3, small * m3);
    }, ctx);

    t.law("order_artinian", [&] {
        const XYMonomial unit(n);
        if (!m1.is_unit() && !xy_greater(m1, unit)) return false;
        return true;
    }, ctx);

    t.law("initial_terms", [&] {
        for (int iota = 0; iota < n; ++iota) {
            if (!(initial_term(expansions[static_cast<std::size_t>(iota)]) ==
                  XYMonomial::xy(n, iota, iota))) return false;
        }
        return true;
    }, ctx);

    t.law("unit_coefficient", [&] {
        for (int iota = 0; iota < n; ++iota) {
            const auto& f = expansions[static_cast<std::size_t>(iota)];
            const auto it = f.terms.find(XYMonomial::xy(n, iota, iota));
            if (it == f.terms.end() || !it->second.is_one()) return false;
        }
        return true;
    }, ctx);

    t.law("support_pattern", [&] {
        for (int iota = 0; iota < n; ++iota) {
            for (const auto& [mono, coeff] : expansions[static_cast<std::size_t>(iota)].terms) {
                if (mono.total_degree() != 2) return false;
                int mu = -1, gamma = -1;
                for (int k = 0; k < n; ++k) {
                    if (mono.xe[static_cast<std::size_t>(k)] == 1) mu = k;
                    if (mono.ye[static_cast<std::size_t>(k)] == 1) gamma = k;
                }
                if (mu < iota || gamma > iota || mu < 0 || gamma < 0) return false;
            }
        }
        return true;
    }, ctx);

    t.law("weight_zero_coefficients", [&] {
        for (int iota = 0; iota < n; ++iota) {
            for (const auto& [mono, coeff] : expansions[static_cast<std::size_t>(iota)].terms) {
                if (!coeff.is_weight_zero()) return false;
            }
        }
        return true;
    }, ctx);

    t.law("numeric_symbolic_agreement", [&] {
        SplitMix64 sub(iseed ^ 0xa96eULL);
        const BorelMatrix<Rational> r = random_rss_borel(sub, n, mc);
        const std::vector<Rational> xv = random_vector(sub, n, mc);
        const std::vector<Rational> yv = random_vector(sub, n, mc);
        std::map<VarId, Rational> assign;
        for (int a = 0; a < n; ++a) {
            for (int b = a; b < n; ++b) assign[VarId::r(a, b)] = r(a, b);
        }
        const Quad q(r, DualBorelMatrix<Rational>(Matrix<Rational>(n)), xv, yv);
        for (int iota = 0; iota < n; ++iota) {
            Rational value(0);
            for (const auto& [mono, coeff] : expansions[static_cast<std::size_t>(iota)].terms) {
                Rational term = coeff.eval(assign);
                for (int k = 0; k < n; ++k) {
                    term *= pow(xv[static_cast<std::size_t>(k)], mono.xe[static_cast<std::size_t>(k)]);
                    term *= pow(yv[static_cast<std::size_t>(k)], mono.ye[static_cast<std::size_t>(k)]);
                }
                value += term;
            }
            if (!(value == invariant_F(q, iota))) return false;
        }
        return true;
    }, ctx);

    t.law("certificate", [&] {
        return regular_sequence_certificate(n).pass;
    }, ctx);
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "idempotents", "diagonalize", "invariance", "limits", "solver", "symbolic"};
    return names;
}

const std::vector<std::string>& suite_laws(const std::string& suite) {
    static const std::map<std::string, std::vector<std::string>> laws = {
        {"idempotents",
         {"orthogonality", "idempotence", "unit_trace", "sum_identity", "vanishing_pattern",
          "commutes_with_r", "diagonal_product_rule", "kills_lower_dual_rows",
          "conjugation_equivariance", "scale_invariance", "closed_form_row",
          "product_order_irrelevant"}},
        {"diagonalize",
         {"inverse_identity", "diagonalizes", "inverse_identity_random_d",
          "diagonalizes_random_d", "conjugation_independent_of_d", "dual_diagonal_formula",
          "diag_fixed_by_action", "diagonal_dual_fixed", "action_identity",
          "action_compatibility"}},
        {"invariance",
         {"F_invariant", "G_invariant", "H_invariant", "K_invariant", "H_equals_diagonal",
          "K_equals_difference_inverse", "K_times_H_difference", "G_of_diagonal_s",
          "trace_form_agreement", "witness_roundtrip_diagonal", "witness_roundtrip_generic",
          "separation", "quotient_constant_on_orbit"}},
        {"limits",
         {"nonnegative_weights", "limit_form", "limit_fixed_by_lambda", "limit_is_idempotent",
          "orbit_invariance", "quotient_constant_under_limit", "recipe_exponents",
          "diagonal_weight_zero", "closed_orbit_commutes"}},
        {"solver",
         {"offdiagonal_eliminated", "diagonal_equals_trace_form", "diag_s_independence",
          "i_zero_gives_diagonal", "j_zero_gives_diagonal", "moment_equivariance",
          "fiber_preserved_by_action", "jacobian_full_rank"}},
        {"symbolic",
         {"order_total", "order_multiplicative", "order_artinian", "initial_terms",
          "unit_coefficient", "support_pattern", "weight_zero_coefficients",
          "numeric_symbolic_agreement", "certificate"}},
    };
    return laws.at(suite);
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& opt) {
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
        throw DomainError("unknown suite \"" + name + "\"");
    }
    VerificationReport rep;
    rep.suite = name;
    rep.seed = opt.seed;
    rep.n_max = opt.n_max;

    int n_lo = 2;
    int n_hi = opt.n_max;
    std::map<int, std::vector<SymbolicBilinear>> expansions;
    if (name == "symbolic") {
        // Expansion is capped; the per-trial laws also evaluate numerically,
        // which only stays cheap at small dimensions.
        n_lo = 1;
        n_hi = std::min(opt.n_max, 4);
        for (int n = n_lo; n <= n_hi && opt.trials > 0; ++n) {
            std::vector<SymbolicBilinear> per_iota;
            for (int iota = 0; iota < n; ++iota) per_iota.push_back(expand_F(n, iota));
            expansions.emplace(n, std::move(per_iota));
        }
    }
    if (n_hi < n_lo) throw DimensionError("suite requires n_max >= " + std::to_string(n_lo));
    rep.n_min = n_lo;
    rep.n_max = n_hi;

    for (int n = n_lo; n <= n_hi; ++n) {
        for (long trial = 0; trial < opt.trials; ++trial) {
            const std::uint64_t iseed =
                mix_seed(opt.seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(trial));
            Trial t(rep, n, iseed);
            try {
                if (name == "idempotents") {
                    trial_idempotents(t, n, iseed, opt.max_coeff);
                } else if (name == "diagonalize") {
                    trial_diagonalize(t, n, iseed, opt.max_coeff);
                } else if (name == "invariance") {
                    trial_invariance(t, n, iseed, opt.max_coeff);
                } else if (name == "limits") {
                    trial_limits(t, n, iseed, opt.max_coeff);
                } else if (name == "solver") {
                    trial_solver(t, n, iseed, opt.max_coeff);
                } else {
                    trial_symbolic(t, n, iseed, opt.max_coeff, expansions.at(n));
                }
                t.fail_missing(suite_laws(name), "law was never evaluated");
            } catch (const std::exception& e) {
                t.fail_missing(suite_laws(name), e.what());
            }
            rep.trials += 1;
            if (opt.per_trial_sink) opt.per_trial_sink(t.per_trial_json());
        }
    }
    return rep;
}

std::vector<VerificationReport> run_suites(const std::string& name, const SuiteOptions& opt) {
    std::vector<VerificationReport> out;
    if (name == "all") {
        for (const std::string& s : suite_names()) out.push_back(run_suite(s, opt));
    } else {
        out.push_back(run_suite(name, opt));
    }
    return out;
}

} // namespace borelred
