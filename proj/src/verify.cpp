#include <json.hpp>

#include "verify_internal.hpp"

namespace qtwist {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::PaperDiscrepancy: return "paper-discrepancy";
    }
    return "?";
}

std::string CheckResult::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["item"] = item;
    j["verdict"] = verdict_name(verdict);
    if (!detail.empty()) j["detail"] = detail;
    j["elapsed_ms"] = elapsed_ms;
    return j.dump();
}

std::pair<Rational, Rational> default_x(Deg n) {
    if (n.m1 != 0) return {rat(1, n.m1), Rational(0)};
    if (n.m2 != 0) return {Rational(0), rat(1, n.m2)};
    throw std::invalid_argument("no x solves x*n = 1 for n = (0,0)");
}

TwistContext context_for(Case c, Deg n, int order) {
    if (case_uses_x(c)) {
        auto [x1, x2] = default_x(n);
        return TwistContext::make(c, n, x1, x2, order);
    }
    return TwistContext::make(c, n, order);
}

std::vector<GenId> generator_window(int w, bool with_derivations) {
    std::vector<GenId> gens;
    for (GenKind k : {GenKind::E, GenKind::F, GenKind::G, GenKind::H}) {
        for (int a = -w; a <= w; ++a) {
            for (int b = -w; b <= w; ++b) {
                if ((k == GenKind::G || k == GenKind::H) && a == 0 && b == 0) continue;
                gens.push_back(GenId::make(k, a, b));
            }
        }
    }
    gens.push_back(GenId::d());
    if (with_derivations) {
        gens.push_back(GenId::d1());
        gens.push_back(GenId::d2());
    }
    return gens;
}

namespace suites {

// ---------------------------------------------------------------- liealg

namespace {

LieElt jacobiator(const GenId& a, const GenId& b, const GenId& c) {
    return bracket_lin(bracket(a, b), LieElt::gen(c)) +
           bracket_lin(bracket(b, c), LieElt::gen(a)) +
           bracket_lin(bracket(c, a), LieElt::gen(b));
}

}  // namespace

std::vector<CheckResult> suite_liealg(const GridParams& p) {
    Recorder rec("liealg");
    const std::vector<GenId> gens = generator_window(p.degree_window);
    const std::size_t n = gens.size();
    const std::string at = "@window=" + std::to_string(p.degree_window);

    rec.item("liealg:antisym" + at, Verdict::Fail, [&]() -> std::optional<std::string> {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                if (!(bracket(gens[i], gens[j]) == -bracket(gens[j], gens[i])))
                    return "[" + gens[i].to_string() + "," + gens[j].to_string() +
                           "] != -[swapped]";
        return std::nullopt;
    });

    // Unordered triples suffice: the jacobiator is alternating once
    // antisymmetry holds, which the previous item checks.
    rec.item("liealg:jacobi" + at, Verdict::Fail, [&]() -> std::optional<std::string> {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                for (std::size_t k = j; k < n; ++k)
                    if (!jacobiator(gens[i], gens[j], gens[k]).is_zero())
                        return "jacobiator(" + gens[i].to_string() + "," +
                               gens[j].to_string() + "," + gens[k].to_string() + ") != 0";
        return std::nullopt;
    });

    rec.item("liealg:grading" + at, Verdict::Fail, [&]() -> std::optional<std::string> {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Deg expect = gens[i].deg + gens[j].deg;
                LieElt br = bracket(gens[i], gens[j]);
                for (const auto& [id, c] : br.terms())
                    if (!(id.deg == expect))
                        return "degree of [" + gens[i].to_string() + "," +
                               gens[j].to_string() + "] term " + id.to_string();
            }
        return std::nullopt;
    });

    rec.item("liealg:tau-hom" + at, Verdict::Fail, [&]() -> std::optional<std::string> {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                LieElt lhs = tau(bracket(gens[i], gens[j]));
                LieElt rhs = bracket_lin(tau(LieElt::gen(gens[i])), tau(LieElt::gen(gens[j])));
                if (!(lhs == rhs))
                    return "tau([" + gens[i].to_string() + "," + gens[j].to_string() + "])";
            }
        return std::nullopt;
    });

    return rec.take();
}

// ---------------------------------------------------------------- lemma 2.1

std::vector<CheckResult> suite_lemma21(const GridParams& p) {
    Recorder rec("lemma21");
    // x = T for a representative two-derivation T with rational coefficients
    const UElt T = UElt::gen(GenId::d1(), LaurentQ(rat(1, 2))) +
                   UElt::gen(GenId::d2(), LaurentQ(rat(1, 2)));
    const std::vector<Rational> values = {Rational(0), Rational(1), Rational(-1),
                                          rat(1, 2),   rat(-1, 2),  Rational(2)};
    const int span = p.factorial_span;

    for (const Rational& a : values) {
        for (const Rational& d : values) {
            std::string at = "@a=" + to_string(a) + ";d=" + to_string(d);

            rec.item("lemma2.1:rise-split" + at, Verdict::Fail,
                     [&]() -> std::optional<std::string> {
                         for (int r = 0; r <= span; ++r)
                             for (int s = 0; r + s <= span; ++s)
                                 if (auto bad = udiff(rising(T, a, unsigned(r + s)),
                                                      rising(T, a, unsigned(r)) *
                                                          rising(T, a + r, unsigned(s))))
                                     return bad;
                         return std::nullopt;
                     });

            rec.item("lemma2.1:fall-split" + at, Verdict::Fail,
                     [&]() -> std::optional<std::string> {
                         for (int r = 0; r <= span; ++r)
                             for (int s = 0; r + s <= span; ++s)
                                 if (auto bad = udiff(falling(T, a, unsigned(r + s)),
                                                      falling(T, a, unsigned(r)) *
                                                          falling(T, a - r, unsigned(s))))
                                     return bad;
                         return std::nullopt;
                     });

            rec.item("lemma2.1:fall-as-rise" + at, Verdict::Fail,
                     [&]() -> std::optional<std::string> {
                         for (int r = 0; r <= span; ++r)
                             if (auto bad = udiff(falling(T, a, unsigned(r)),
                                                  rising(T, a - r + 1, unsigned(r))))
                                 return bad;
                         return std::nullopt;
                     });

            rec.item("lemma2.1:binom-sum-mixed" + at, Verdict::Fail,
                     [&]() -> std::optional<std::string> {
                         for (int m = 0; m <= span; ++m) {
                             UElt acc;
                             for (int r = 0; r <= m; ++r) {
                                 int s = m - r;
                                 Rational coeff = 1 / (factorial(unsigned(r)) * factorial(unsigned(s)));
                                 if (s % 2 == 1) coeff = -coeff;
                                 acc += LaurentQ(coeff) *
                                        (falling(T, a, unsigned(r)) * rising(T, d, unsigned(s)));
                             }
                             UElt rhs =
                                 UElt::scalar(LaurentQ(gen_binomial(a - d, unsigned(m))));
                             if (auto bad = udiff(acc, rhs)) return bad;
                         }
                         return std::nullopt;
                     });

            rec.item("lemma2.1:binom-sum-falling" + at, Verdict::Fail,
                     [&]() -> std::optional<std::string> {
                         for (int m = 0; m <= span; ++m) {
                             UElt acc;
                             for (int r = 0; r <= m; ++r) {
                                 int s = m - r;
                                 Rational coeff = 1 / (factorial(unsigned(r)) * factorial(unsigned(s)));
                                 if (s % 2 == 1) coeff = -coeff;
                                 acc += LaurentQ(coeff) * (falling(T, a, unsigned(r)) *
                                                           falling(T, d - r, unsigned(s)));
                             }
                             UElt rhs = UElt::scalar(
                                 LaurentQ(gen_binomial(a - d + m - 1, unsigned(m))));
                             if (auto bad = udiff(acc, rhs)) return bad;
                         }
                         return std::nullopt;
                     });
        }
    }
    return rec.take();
}

// ---------------------------------------------------------------- lemma 2.4

std::vector<CheckResult> suite_lemma24(const GridParams& p) {
    Recorder rec("lemma24");
    for (Case c : kAllCases) {
        for (Deg n : p.n_list) {
            TwistContext ctx = context_for(c, n, p.order);
            std::string at = "@" + ctx.to_string();

            rec.item("lemma2.4:u-closed" + at, Verdict::Fail,
                     [&]() -> std::optional<std::string> {
                         for (const Rational& cc : p.c_list)
                             if (auto bad = sdiff(mu_id_s0(twist_element(ctx, cc)),
                                                  u_family_closed(ctx, cc)))
                                 return bad;
                         return std::nullopt;
                     });

            rec.item("lemma2.4:uinv-closed" + at, Verdict::Fail,
                     [&]() -> std::optional<std::string> {
                         for (const Rational& cc : p.c_list)
                             if (auto bad = sdiff(mu_s0_id(inverse_twist_element(ctx, cc)),
                                                  u_inverse_family_closed(ctx, cc)))
                                 return bad;
                         return std::nullopt;
                     });

            rec.item("lemma2.4:delta0-falling" + at, Verdict::Fail,
                     [&]() -> std::optional<std::string> {
                         for (const Rational& cc : p.c_list) {
                             for (int m = 0; m <= p.factorial_span; ++m) {
                                 Tensor2 lhs = delta0(falling(ctx.T(), 0, unsigned(m)));
                                 Tensor2 rhs;
                                 for (int i = 0; i <= m; ++i)
                                     rhs += LaurentQ(gen_binomial(m, unsigned(i))) *
                                            tensor_of(falling(ctx.T(), -cc, unsigned(i)),
                                                      falling(ctx.T(), cc, unsigned(m - i)));
                                 if (!(lhs == rhs))
                                     return "m=" + std::to_string(m) + ",c=" + to_string(cc) +
                                            ": lhs = " + lhs.to_string() +
                                            " ; rhs = " + rhs.to_string();
                             }
                         }
                         return std::nullopt;
                     });

            rec.item("lemma2.4:twist-pair" + at, Verdict::Fail,
                     [&]() -> std::optional<std::string> {
                         for (const Rational& cc : p.c_list)
                             for (const Rational& dd : p.c_list)
                                 if (auto bad = sdiff(
                                         twist_element(ctx, cc) * inverse_twist_element(ctx, dd),
                                         right_leg(one_minus_Et_pow(ctx.E(), cc - dd, p.order))))
                                     return bad;
                         return std::nullopt;
                     });

            rec.item("lemma2.4:u-pair" + at, Verdict::Fail,
                     [&]() -> std::optional<std::string> {
                         for (const Rational& cc : p.c_list)
                             for (const Rational& dd : p.c_list)
                                 if (auto bad =
                                         sdiff(u_family_closed(ctx, cc) *
                                                   u_inverse_family_closed(ctx, dd),
                                               one_minus_Et_pow(ctx.E(), -(cc + dd), p.order)))
                                     return bad;
                         return std::nullopt;
                     });

            rec.item("lemma2.4:inverse" + at, Verdict::Fail,
                     [&]() -> std::optional<std::string> {
                         for (const Rational& cc : p.c_list) {
                             if (auto bad = sdiff(twist_element(ctx, cc).inverse(),
                                                  inverse_twist_element(ctx, cc)))
                                 return bad;
                             if (auto bad = sdiff(u_family_closed(ctx, cc).inverse(),
                                                  u_inverse_family_closed(ctx, -cc)))
                                 return bad;
                         }
                         return std::nullopt;
                     });
        }
    }
    return rec.take();
}

// ---------------------------------------------------------------- twist laws

std::vector<CheckResult> suite_cocycle(const GridParams& p) {
    Recorder rec("cocycle");
    for (Case c : kAllCases) {
        for (Deg n : p.n_list) {
            TwistContext ctx = context_for(c, n, p.order);
            std::string at = "@" + ctx.to_string();
            rec.item("twist:cocycle" + at, Verdict::Fail, [&]() -> std::optional<std::string> {
                CocycleReport rep = check_cocycle_identity(ctx);
                if (rep.pass) return std::nullopt;
                return rep.detail;
            });
            rec.item("twist:counit" + at, Verdict::Fail, [&]() -> std::optional<std::string> {
                CocycleReport rep = check_counit_conditions(ctx);
                if (rep.pass) return std::nullopt;
                return rep.detail;
            });
        }
    }
    return rec.take();
}

std::vector<CheckResult> suite_hopf(const GridParams& p) {
    Recorder rec("hopf");
    for (Case c : kAllCases) {
        Deg n = p.n_list.front();
        TwistContext ctx = context_for(c, n, p.order);
        TwistEngine eng(ctx);
        std::vector<UElt> samples;
        for (const GenId& id : generator_window(p.hopf_window)) samples.push_back(UElt::gen(id));

        auto t0 = Clock::now();
        HopfReport rep = check_hopf(eng, samples);
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();

        for (const char* ax : {"coassoc", "counit", "antipode", "delta-hom", "counit-hom",
                               "antipode-antihom"}) {
            auto it = rep.failure_counts.find(ax);
            int bad = it == rep.failure_counts.end() ? 0 : it->second;
            rec.add("hopf:" + std::string(ax) + "@" + ctx.to_string(),
                    bad == 0 ? Verdict::Pass : Verdict::Fail,
                    bad == 0 ? "" : std::to_string(bad) + " failing instances", ms / 6.0);
        }
    }
    return rec.take();
}

// ------------------------------------------------------------ lemma 3.1/4.1

std::vector<CheckResult> suite_lemma31(const GridParams& p) {
    Recorder rec("lemma31");
    for (Deg n : p.n_list) {
        TwistContext ctx = context_for(Case::G, n, p.order);
        const UElt& E = ctx.E();

        for (const Rational& cc : p.c_list) {
            std::string at = "@c=" + to_string(cc) + ";n=" + deg_str(n);
            rec.item("lemma3.1:weight-fall" + at, Verdict::PaperDiscrepancy,
                     [&]() -> std::optional<std::string> {
                         for (const GenId& l : suite_generators(p, n)) {
                             Rational w = ctx.weight(l);
                             UElt le = UElt::gen(l);
                             for (int i = 0; i <= p.ladder_power; ++i)
                                 if (auto bad = udiff(le * falling(ctx.T(), cc, unsigned(i)),
                                                      falling(ctx.T(), cc - w, unsigned(i)) * le))
                                     return bad;
                         }
                         return std::nullopt;
                     });
            rec.item("lemma3.1:weight-rise" + at, Verdict::PaperDiscrepancy,
                     [&]() -> std::optional<std::string> {
                         for (const GenId& l : suite_generators(p, n)) {
                             Rational w = ctx.weight(l);
                             UElt le = UElt::gen(l);
                             for (int i = 0; i <= p.ladder_power; ++i)
                                 if (auto bad = udiff(le * rising(ctx.T(), cc, unsigned(i)),
                                                      rising(ctx.T(), cc - w, unsigned(i)) * le))
                                     return bad;
                         }
                         return std::nullopt;
                     });
            rec.item("lemma3.1:E-shift" + at, Verdict::PaperDiscrepancy,
                     [&]() -> std::optional<std::string> {
                         for (int i = 0; i <= p.ladder_power; ++i) {
                             if (auto bad = udiff(E * falling(ctx.T(), cc, unsigned(i)),
                                                  falling(ctx.T(), cc - 1, unsigned(i)) * E))
                                 return bad;
                             if (auto bad = udiff(E * rising(ctx.T(), cc, unsigned(i)),
                                                  rising(ctx.T(), cc - 1, unsigned(i)) * E))
                                 return bad;
                         }
                         return std::nullopt;
                     });
        }

        for (GenKind y : {GenKind::F, GenKind::E, GenKind::G}) {
            for (Deg m : suite_degrees(p, n)) {
                if (y == GenKind::G && m.is_zero()) continue;
                std::string at = "@m=" + deg_str(m) + ";n=" + deg_str(n);
                rec.item(std::string("lemma3.1:") + kind_letter(y) + "E" + at,
                         Verdict::PaperDiscrepancy, [&]() -> std::optional<std::string> {
                             for (int j = 0; j <= p.ladder_power; ++j) {
                                 UElt lhs = gen_u(y, m) * u_pow(E, unsigned(j));
                                 UElt rhs;
                                 for (int i = 0; i <= j; ++i) {
                                     LaurentQ rho = gamma_coeff(y, unsigned(i), m, n);
                                     if (rho.is_zero()) continue;
                                     Deg target = m + i * n;
                                     if (y == GenKind::G && target.is_zero()) continue;
                                     rhs += (LaurentQ(gen_binomial(j, unsigned(i))) * rho) *
                                            (u_pow(E, unsigned(j - i)) * gen_u(y, target));
                                 }
                                 if (auto bad = udiff(lhs, rhs)) return bad;
                             }
                             return std::nullopt;
                         });
            }
        }

        rec.item("lemma3.1:dE@n=" + deg_str(n), Verdict::PaperDiscrepancy,
                 [&]() -> std::optional<std::string> {
                     for (int j = 0; j <= p.ladder_power; ++j) {
                         UElt ej = u_pow(E, unsigned(j));
                         if (auto bad =
                                 udiff(UElt::gen(GenId::d()) * ej, ej * UElt::gen(GenId::d())))
                             return bad;
                     }
                     return std::nullopt;
                 });
        rec.item("lemma3.1:hE@n=" + deg_str(n), Verdict::PaperDiscrepancy,
                 [&]() -> std::optional<std::string> {
                     for (Deg m : suite_degrees(p, n)) {
                         if (m.is_zero()) continue;
                         for (int j = 0; j <= p.ladder_power; ++j) {
                             UElt ej = u_pow(E, unsigned(j));
                             if (auto bad =
                                     udiff(gen_u(GenKind::H, m) * ej, ej * gen_u(GenKind::H, m)))
                                 return bad;
                         }
                     }
                     return std::nullopt;
                 });

        for (int which = 1; which <= 2; ++which) {
            rec.item("lemma3.1:d" + std::to_string(which) + "E@n=" + deg_str(n),
                     Verdict::PaperDiscrepancy, [&]() -> std::optional<std::string> {
                         GenId di = which == 1 ? GenId::d1() : GenId::d2();
                         long ni = which == 1 ? n.m1 : n.m2;
                         for (int j = 0; j <= p.ladder_power; ++j) {
                             UElt ej = u_pow(E, unsigned(j));
                             if (auto bad = udiff(UElt::gen(di) * ej,
                                                  ej * UElt::gen(di) + LaurentQ(j * ni) * ej))
                                 return bad;
                         }
                         return std::nullopt;
                     });
        }
    }
    return rec.take();
}

std::vector<CheckResult> suite_lemma41(const GridParams& p) {
    Recorder rec("lemma41");
    for (Deg n : p.n_list) {
        TwistContext ctx = context_for(Case::E, n, p.order);
        const UElt& E = ctx.E();
        const long n1 = n.m1, n2 = n.m2;

        rec.item("lemma4.1:eE@n=" + deg_str(n), Verdict::PaperDiscrepancy,
                 [&]() -> std::optional<std::string> {
                     for (Deg m : suite_degrees(p, n))
                         for (int j = 0; j <= p.ladder_power; ++j) {
                             UElt ej = u_pow(E, unsigned(j));
                             if (auto bad =
                                     udiff(gen_u(GenKind::E, m) * ej, ej * gen_u(GenKind::E, m)))
                                 return bad;
                         }
                     return std::nullopt;
                 });

        rec.item("lemma4.1:dE@n=" + deg_str(n), Verdict::PaperDiscrepancy,
                 [&]() -> std::optional<std::string> {
                     for (int j = 0; j <= p.ladder_power; ++j) {
                         UElt ej = u_pow(E, unsigned(j));
                         if (auto bad = udiff(UElt::gen(GenId::d()) * ej,
                                              ej * UElt::gen(GenId::d()) + LaurentQ(2 * j) * ej))
                             return bad;
                     }
                     return std::nullopt;
                 });

        for (int which = 1; which <= 2; ++which) {
            rec.item("lemma4.1:d" + std::to_string(which) + "E@n=" + deg_str(n),
                     Verdict::PaperDiscrepancy, [&]() -> std::optional<std::string> {
                         GenId di = which == 1 ? GenId::d1() : GenId::d2();
                         long ni = which == 1 ? n1 : n2;
                         for (int j = 0; j <= p.ladder_power; ++j) {
                             UElt ej = u_pow(E, unsigned(j));
                             if (auto bad = udiff(UElt::gen(di) * ej,
                                                  ej * UElt::gen(di) + LaurentQ(j * ni) * ej))
                                 return bad;
                         }
                         return std::nullopt;
                     });
        }

        for (Deg m : suite_degrees(p, n)) {
            std::string at = "@m=" + deg_str(m) + ";n=" + deg_str(n);
            if (!(m + n).is_zero()) {
                rec.item("lemma4.1:fE" + at, Verdict::PaperDiscrepancy,
                         [&]() -> std::optional<std::string> {
                             LaurentQ s_m = quadratic_coeff(m, n);
                             for (int j = 0; j <= p.ladder_power; ++j) {
                                 UElt lhs = gen_u(GenKind::F, m) * u_pow(E, unsigned(j));
                                 UElt rhs = u_pow(E, unsigned(j)) * gen_u(GenKind::F, m);
                                 if (j >= 1) {
                                     UElt ej1 = u_pow(E, unsigned(j - 1));
                                     rhs += (LaurentQ(j) * qp(static_cast<long>(m.m2) * n1)) *
                                            (ej1 * gen_u(GenKind::H, m + n));
                                     rhs -= (LaurentQ(j) * qp(static_cast<long>(m.m1) * n2)) *
                                            (ej1 * gen_u(GenKind::G, m + n));
                                 }
                                 if (j >= 2)
                                     rhs -= (LaurentQ(2 * gen_binomial(j, 2)) * s_m) *
                                            (u_pow(E, unsigned(j - 2)) *
                                             gen_u(GenKind::E, m + 2 * n));
                                 if (auto bad = udiff(lhs, rhs)) return bad;
                             }
                             return std::nullopt;
                         });
            } else {
                rec.item("lemma4.1:fE-branch" + at, Verdict::PaperDiscrepancy,
                         [&]() -> std::optional<std::string> {
                             for (int j = 0; j <= p.ladder_power; ++j) {
                                 UElt lhs = gen_u(GenKind::F, m) * u_pow(E, unsigned(j));
                                 UElt rhs = u_pow(E, unsigned(j)) * gen_u(GenKind::F, m);
                                 if (j >= 1)
                                     rhs -= (LaurentQ(j) * qp(-n1 * n2)) *
                                            (u_pow(E, unsigned(j - 1)) * UElt::gen(GenId::d()));
                                 if (j >= 2)
                                     rhs -= (LaurentQ(2 * gen_binomial(j, 2)) * qp(-n1 * n2)) *
                                            u_pow(E, unsigned(j - 1));
                                 if (auto bad = udiff(lhs, rhs)) return bad;
                             }
                             return std::nullopt;
                         });
            }

            if (!m.is_zero()) {
                rec.item("lemma4.1:gE" + at, Verdict::PaperDiscrepancy,
                         [&]() -> std::optional<std::string> {
                             for (int j = 0; j <= p.ladder_power; ++j) {
                                 UElt lhs = gen_u(GenKind::G, m) * u_pow(E, unsigned(j));
                                 UElt rhs = u_pow(E, unsigned(j)) * gen_u(GenKind::G, m);
                                 if (j >= 1)
                                     rhs += (LaurentQ(j) * qp(static_cast<long>(m.m2) * n1)) *
                                            (u_pow(E, unsigned(j - 1)) *
                                             gen_u(GenKind::E, m + n));
                                 if (auto bad = udiff(lhs, rhs)) return bad;
                             }
                             return std::nullopt;
                         });
                rec.item("lemma4.1:hE" + at, Verdict::PaperDiscrepancy,
                         [&]() -> std::optional<std::string> {
                             for (int j = 0; j <= p.ladder_power; ++j) {
                                 UElt lhs = gen_u(GenKind::H, m) * u_pow(E, unsigned(j));
                                 UElt rhs = u_pow(E, unsigned(j)) * gen_u(GenKind::H, m);
                                 if (j >= 1)
                                     rhs -= (LaurentQ(j) * qp(static_cast<long>(m.m1) * n2)) *
                                            (u_pow(E, unsigned(j - 1)) *
                                             gen_u(GenKind::E, m + n));
                                 if (auto bad = udiff(lhs, rhs)) return bad;
                             }
                             return std::nullopt;
                         });
            }
        }
    }
    return rec.take();
}

std::vector<CheckResult> suite_lemma51(const GridParams& p) {
    Recorder rec("lemma51");
    Deg n = p.n_list.front();  // the identities do not involve n
    TwistContext ctx = context_for(Case::D, n, p.order);
    for (const GenId& l : suite_generators(p, n)) {
        for (const Rational& cc : p.c_list) {
            rec.item("lemma5.1:" + family_name(l.kind) + "@" + l.to_string() +
                         ";c=" + to_string(cc),
                     Verdict::PaperDiscrepancy, [&]() -> std::optional<std::string> {
                         Rational w = ctx.weight(l);
                         UElt le = UElt::gen(l);
                         for (int i = 0; i <= p.ladder_power; ++i) {
                             if (auto bad = udiff(le * falling(ctx.T(), cc, unsigned(i)),
                                                  falling(ctx.T(), cc - w, unsigned(i)) * le))
                                 return bad;
                             if (auto bad = udiff(le * rising(ctx.T(), cc, unsigned(i)),
                                                  rising(ctx.T(), cc - w, unsigned(i)) * le))
                                 return bad;
                         }
                         return std::nullopt;
                     });
        }
    }
    return rec.take();
}

}  // namespace suites

}  // namespace qtwist
