#include "verify.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <vector>

#include "fusion_table.hpp"
#include "genfun.hpp"
#include "modular.hpp"
#include "multiplicity.hpp"
#include "oblade.hpp"
#include "paths.hpp"
#include "profiles.hpp"
#include "render.hpp"

namespace su3f {

namespace {

const char* glyph(bool ok) { return ok ? "✓" : "✗"; }

struct Ctx {
    std::string out;
    bool ok = true;

    void line(const std::string& s) {
        out += s;
        out += '\n';
    }
    void note_failure(const std::string& s) {
        ok = false;
        line("  " + s);
    }
};

std::vector<Weight> weights_up_to(int max_norm) {
    std::vector<Weight> out;
    for (int n = 0; n <= max_norm; ++n)
        for (int l1 = 0; l1 <= n; ++l1) out.push_back({l1, n - l1});
    return out;
}

// Level value along the ramp, from the tableau pipeline.
std::int64_t ramp_value(const SemimagicResult& sm, int level) {
    if (sm.mult == 0 || level < sm.k0_min) return 0;
    return std::min<std::int64_t>(sm.mult, level - sm.k0_min + 1);
}

void suite_tables(Ctx& c, int max_level, bool fault) {
    if (fault) {
        FusionTable t = build_table(1);
        t.matrices[1].at(0, 0) += 1;
        const TableReport r = verify_table(t);
        c.ok = false;
        if (!r.ok)
            c.line("seeded fault detected: " + r.first_violation);
        else
            c.line("seeded fault NOT detected by the table checks");
        return;
    }
    for (int k = 0; k <= max_level; ++k) {
        const FusionTable t = build_table(k);
        const TableReport r = verify_table(t);
        bool semi = true;
        std::string semi_detail;
        for (int i = 0; i < t.size() && semi; ++i)
            for (int row = 0; row < t.size() && semi; ++row)
                for (int col = 0; col < t.size(); ++col) {
                    const Triple tri{t.weights[i], t.weights[row], t.weights[col]};
                    const SemimagicResult sm = semimagic_multiplicity(tri);
                    if (t.matrices[i].at(row, col) != ramp_value(sm, k)) {
                        semi = false;
                        semi_detail = "tableau pipeline disagrees at " + format_triple(tri);
                        break;
                    }
                }
        c.line("k=" + std::to_string(k) + ": structure " + glyph(r.ok) + " semimagic " +
               glyph(semi));
        if (!r.ok) c.note_failure(r.first_violation);
        if (!semi) c.note_failure(semi_detail);
    }

    bool autos = true;
    auto run_autos = [&](Weight lam, Weight mu) {
        const AutomorphismReport r = automorphism_checks(lam, mu);
        if (!r.all_ok) {
            autos = false;
            for (const AutomorphismCheck& ch : r.checks)
                if (ch.applicable && !ch.ok)
                    c.note_failure("automorphism " + ch.id + " on " + format_weight(lam) +
                                   " x " + format_weight(mu) + ": " + ch.detail);
        }
    };
    run_autos({9, 5}, {6, 2});
    std::mt19937 rng(7341);
    std::uniform_int_distribution<int> comp(0, 6);
    for (int done = 0; done < 10;) {
        const Weight lam{comp(rng), comp(rng)};
        const Weight mu{comp(rng), comp(rng)};
        const AutomorphismReport probe = automorphism_checks(lam, mu);
        bool any = false;
        for (const AutomorphismCheck& ch : probe.checks) any = any || ch.applicable;
        if (!any) continue;
        ++done;
        if (!probe.all_ok) {
            autos = false;
            c.note_failure("automorphism failure on " + format_weight(lam) + " x " +
                           format_weight(mu));
        }
    }
    c.line(std::string("automorphisms ") + glyph(autos));
    if (!autos) c.ok = false;
}

void suite_genfun(Ctx& c, int max_level, bool fault) {
    if (fault) {
        const IdentityReport r = verify_identities(2, true);
        c.ok = false;
        c.out += render_identity_report(r);
        if (!r.all_ok)
            c.line("seeded fault: first failing identity " + r.first_failure);
        else
            c.line("seeded fault NOT detected by the identity checks");
        return;
    }
    for (int k = 1; k <= max_level; ++k) {
        const IdentityReport r = verify_identities(k);
        c.out += render_identity_report(r);
        if (!r.all_ok) c.ok = false;

        const FusionTable t = build_table(k);
        const GenFun gf = build_genfun(t);
        const bool l1 = lemma1_colsums(t);
        const bool l2 = lemma2_traces(t);
        const bool bs = boundary_structure(t);
        const bool rb = rows_balanced(gf.X) && rows_balanced(lambda_combination(gf));
        if (!(l1 && l2 && bs && rb))
            c.note_failure("structure at k=" + std::to_string(k) + ": colsums " + glyph(l1) +
                           " traces " + glyph(l2) + " boundary " + glyph(bs) + " balance " +
                           glyph(rb));
    }

    const bool tw = truncation_window_matches(12, 4);
    c.line(std::string("truncation window (k=12, norms<=4) ") + glyph(tw));
    if (!tw) c.ok = false;

    bool chain_ok = true;
    for (int k = 1; k <= 10; ++k) {
        const DynkinDiagram d = dynkin('A', k + 1);
        const Su2Report r = su2_generating(d.adjacency, d.coxeter);
        if (!r.all_ok()) {
            chain_ok = false;
            c.note_failure("rank-1 chain failure on " + d.name);
        }
    }
    c.line(std::string("rank-1 chains A2..A11 ") + glyph(chain_ok));
    if (!chain_ok) c.ok = false;
}

void suite_sums(Ctx& c, int max_level) {
    for (int k = 0; k <= max_level; ++k) {
        const Su3Sums s = su3_sums(k);
        c.line("k=" + std::to_string(k) + ": ΣX " + glyph(s.x_ok) + " ΣGX " +
               glyph(s.gx_ok) + " ΣΛ " + glyph(s.lambda_ok) + " ΣK " +
               glyph(s.k_ok));
        if (!(s.x_ok && s.gx_ok && s.lambda_ok && s.k_ok)) c.ok = false;
        if (!s.lambda_u_ok) c.note_failure("row-sum identity failed at k=" + std::to_string(k));
        if (!s.six_combination_ok)
            c.note_failure("balanced combination failed at k=" + std::to_string(k));

        const SigmaLambda1 sl = sigma_lambda1_poly(k);
        if (!(sl.matches_direct && sl.binomial_ok))
            c.note_failure("edge-sum polynomial failed at k=" + std::to_string(k));

        const PointCheckReport pc = closed_form_point_checks(k, 20, 91000u + unsigned(k));
        if (!pc.ok)
            c.note_failure("rational-point closed form failed at k=" + std::to_string(k) +
                           ": " + pc.detail);

        if (!p_replacement_ok(build_table(k)))
            c.note_failure("rotation absorption failed at k=" + std::to_string(k));
    }
}

void suite_modular(Ctx& c, int max_level) {
    for (int k = 0; k <= max_level; ++k) {
        try {
            const SMatrix s = s_matrix(k);
            const SMatrixInvariants inv = s_matrix_invariants(s);
            const VerlindeResult vr = verlinde_fusion(s);
            const bool match = vr.table.matrices == build_table(k).matrices;
            const RealColumnReport rc = real_column_checks(s);
            char dev[32];
            std::snprintf(dev, sizeof dev, "%.3e", vr.max_deviation);
            c.line("k=" + std::to_string(k) + ": S " + glyph(inv.ok) + " verlinde " +
                   glyph(match) + " (dev=" + dev + ") real " + glyph(rc.ok()));
            if (!(inv.ok && match && rc.ok())) c.ok = false;
        } catch (const std::exception& e) {
            c.line("k=" + std::to_string(k) + ": " + glyph(false));
            c.note_failure(e.what());
        }
    }
}

void suite_propP(Ctx& c, int max_weight, int max_level) {
    const std::vector<Weight> ws = weights_up_to(max_weight);
    long pairs = 0;
    bool prop = true, rules = true;
    for (const Weight lam : ws)
        for (const Weight mu : ws) {
            ++pairs;
            for (int k = 0; k <= max_level; ++k)
                if (!verify_property_P(lam, mu, k)) {
                    if (prop)
                        c.note_failure("multiset mismatch for " + format_weight(lam) + " x " +
                                       format_weight(mu) + " at k=" + std::to_string(k));
                    prop = false;
                }
            if (!verify_property_P(lam, mu, kClassical)) {
                if (prop)
                    c.note_failure("classical multiset mismatch for " + format_weight(lam) +
                                   " x " + format_weight(mu));
                prop = false;
            }
            const SumRuleReport sr = sum_rules(lam, mu, kClassical);
            if (!sr.ok) {
                if (rules)
                    c.note_failure("sum rules failed for " + format_weight(lam) + " x " +
                                   format_weight(mu));
                rules = false;
            }
        }
    c.line("pairs=" + std::to_string(pairs) + " levels=0.." + std::to_string(max_level) +
           ": multisets " + glyph(prop) + " sum rules " + glyph(rules));
    if (!(prop && rules)) c.ok = false;
}

// The six leg permutations of a coupling, as triples.
std::array<Triple, 6> leg_moves(const Triple& t) {
    const std::array<Weight, 3> legs{t.lam, t.mu, conjugate(t.nu)};
    constexpr int perms[6][3] = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1},
                                 {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
    std::array<Triple, 6> out;
    for (int i = 0; i < 6; ++i)
        out[i] = {legs[perms[i][0]], legs[perms[i][1]], conjugate(legs[perms[i][2]])};
    return out;
}

void suite_oblades(Ctx& c, int max_weight) {
    const std::vector<Weight> ws = weights_up_to(max_weight);
    long triples = 0, admissible = 0;
    bool count_ok = true, window_ok = true, g_ok = true;
    bool psi_ok = true, psi_coord_ok = true;

    std::vector<Triple> pool;  // admissible triples, for the sampled checks
    for (const Weight lam : ws)
        for (const Weight mu : ws)
            for (const Weight nu : ws) {
                const Triple t{lam, mu, nu};
                ++triples;
                const SemimagicResult sm = semimagic_multiplicity(t);
                const std::vector<OBlade> obs = enumerate_couplings(t);
                if (static_cast<std::int64_t>(obs.size()) != sm.mult) {
                    if (count_ok) c.note_failure("coupling count mismatch at " + format_triple(t));
                    count_ok = false;
                }
                if (sm.mult == 0) continue;
                ++admissible;
                pool.push_back(t);

                std::vector<int> th;
                for (const OBlade& o : obs) th.push_back(threshold(o));
                std::sort(th.begin(), th.end());
                for (size_t i = 0; i < th.size(); ++i)
                    if (th[i] != sm.k0_min + static_cast<int>(i)) {
                        if (window_ok)
                            c.note_failure("threshold window mismatch at " + format_triple(t));
                        window_ok = false;
                    }

                const int s1 = lam.l1 + mu.l1 + nu.l2, s2 = lam.l2 + mu.l2 + nu.l1;
                for (const OBlade& o : obs)
                    if (3 * o.g() != s1 - s2) {
                        if (g_ok) c.note_failure("inner-coordinate identity at " + format_triple(t));
                        g_ok = false;
                    }

                const Triple p = psi_triple(t);
                const SemimagicResult pm = semimagic_multiplicity(p);
                if (psi_triple(p) != t || pm.mult != sm.mult || pm.k0_min != sm.k0_min) {
                    if (psi_ok) c.note_failure("psi invariants at " + format_triple(t));
                    psi_ok = false;
                }
                for (const OBlade& o : obs) {
                    const OBlade q = psi_oblade(o);
                    if (!is_valid(q) || threshold(q) != threshold(o) || weights_of(q) != p) {
                        if (psi_coord_ok)
                            c.note_failure("psi coordinate map at " + format_triple(t));
                        psi_coord_ok = false;
                    }
                }
            }

    // Star relation among the fundamentals, in coordinates.
    const OBlade lf = left_fork(), rf = right_fork();
    OBlade star{};
    for (int i = 0; i < 7; ++i) star.coords[i] = lf.coords[i] + rf.coords[i];
    const bool forks = star == OBlade{{0, 1, 0, 1, 0, 1, 0}};
    if (!forks) c.note_failure("fork relation failed");

    // Psi commutes with the leg permutations (sampled).
    bool moves_ok = true;
    std::mt19937 rng(5150);
    std::uniform_int_distribution<size_t> pick(0, pool.empty() ? 0 : pool.size() - 1);
    for (int trial = 0; trial < 200 && !pool.empty(); ++trial) {
        const Triple t = pool[pick(rng)];
        const std::array<Triple, 6> mt = leg_moves(t);
        const std::array<Triple, 6> mp = leg_moves(psi_triple(t));
        for (int i = 0; i < 6; ++i)
            if (psi_triple(mt[i]) != mp[i]) {
                if (moves_ok) c.note_failure("psi/permutation clash at " + format_triple(t));
                moves_ok = false;
            }
    }

    c.line("triples=" + std::to_string(triples) + " admissible=" + std::to_string(admissible) +
           ": counts " + glyph(count_ok) + " windows " + glyph(window_ok) + " inner " +
           glyph(g_ok) + " psi " + glyph(psi_ok && psi_coord_ok) + " forks " + glyph(forks) +
           " moves " + glyph(moves_ok));
    if (!(count_ok && window_ok && g_ok && psi_ok && psi_coord_ok && forks && moves_ok))
        c.ok = false;
}

}  // namespace

VerifyResult run_verify(const VerifyOptions& opt) {
    const std::string& s = opt.suite;
    const bool all = s == "all";
    if (!(all || s == "tables" || s == "genfun" || s == "sums" || s == "modular" ||
          s == "propP" || s == "oblades"))
        throw std::invalid_argument("unknown suite: " + s);

    Ctx c;
    const auto ml = [&](int dflt) { return opt.max_level >= 0 ? opt.max_level : dflt; };
    const auto mw = [&](int dflt) { return opt.max_weight >= 0 ? opt.max_weight : dflt; };

    if (all && opt.seed_fault) {
        // Negative control: run just the two fault injections.
        c.line("[tables]");
        suite_tables(c, 0, true);
        c.line("[genfun]");
        suite_genfun(c, 0, true);
        return {c.ok, c.out};
    }

    if (all || s == "tables") {
        if (all) c.line("[tables]");
        suite_tables(c, ml(10), opt.seed_fault);
    }
    if (all || s == "genfun") {
        if (all) c.line("[genfun]");
        suite_genfun(c, ml(8), opt.seed_fault);
    }
    if (all || s == "sums") {
        if (all) c.line("[sums]");
        suite_sums(c, ml(12));
    }
    if (all || s == "modular") {
        if (all) c.line("[modular]");
        suite_modular(c, ml(12));
    }
    if (all || s == "propP") {
        if (all) c.line("[propP]");
        suite_propP(c, mw(8), ml(16));
    }
    if (all || s == "oblades") {
        if (all) c.line("[oblades]");
        suite_oblades(c, mw(8));
    }
    return {c.ok, c.out};
}

}  // namespace su3f
