#include "fdcalc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "fdcalc/arith.hpp"
#include "fdcalc/descriptor.hpp"
#include "fdcalc/errors.hpp"
#include "fdcalc/formulas.hpp"
#include "fdcalc/func_table.hpp"
#include "fdcalc/group.hpp"
#include "fdcalc/group_ring.hpp"

namespace fdcalc {

namespace {

using Rng = std::mt19937_64;

std::uint64_t pick(Rng& rng, std::uint64_t n) { return rng() % n; }

struct SuiteContext {
    const VerifyBudget& budget;
    SuiteReport report;

    void check(bool ok, const std::string& inputs, const std::string& expected,
               const std::string& actual, const char* law) {
        ++report.cases_run;
        if (!ok) report.failures.push_back(SuiteFailure{inputs, expected, actual, law});
    }
};

std::string table_str(const FuncTable& f) {
    std::ostringstream os;
    os << f.domain().str() << "->" << f.codomain().str() << " [";
    for (std::size_t i = 0; i < f.value_indices().size(); ++i) {
        if (i > 0) os << ",";
        if (i >= 24) {
            os << "...";
            break;
        }
        os << f.value_index(i);
    }
    os << "]";
    return os.str();
}

std::vector<FiniteAbelianGroup> nontrivial_groups(std::uint64_t max_order) {
    std::vector<FiniteAbelianGroup> out;
    for (FiniteAbelianGroup& g : enumerate_abelian_groups(max_order))
        if (!g.is_trivial()) out.push_back(std::move(g));
    return out;
}

using GroupPair = std::pair<FiniteAbelianGroup, FiniteAbelianGroup>;

std::vector<GroupPair> all_pairs(std::uint64_t max_order) {
    auto groups = nontrivial_groups(max_order);
    std::vector<GroupPair> out;
    for (const auto& a : groups)
        for (const auto& b : groups) out.emplace_back(a, b);
    return out;
}

// Pairs of p-groups over one prime: every map between them has finite degree.
std::vector<GroupPair> matched_pairs(std::uint64_t max_order) {
    std::vector<GroupPair> out;
    for (const auto& [a, b] : all_pairs(max_order)) {
        auto fa = factorize(a.order());
        auto fb = factorize(b.order());
        if (fa.size() == 1 && fb.size() == 1 && fa.front().first == fb.front().first)
            out.emplace_back(a, b);
    }
    return out;
}

GroupElement random_element(Rng& rng, const FiniteAbelianGroup& g) {
    return g.element_at(pick(rng, g.order()));
}

FuncTable random_map(Rng& rng, const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    FuncTable f(a, b);
    for (std::uint64_t i = 0; i < a.order(); ++i) f.set_value_index(i, pick(rng, b.order()));
    return f;
}

FuncTable random_hom(Rng& rng, const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    std::vector<GroupElement> images;
    for (std::size_t i = 0; i < a.arity(); ++i) {
        std::vector<std::uint64_t> candidates;
        for (std::uint64_t y = 0; y < b.order(); ++y)
            if (a.factors()[i] % b.order_of(b.element_at(y)) == 0) candidates.push_back(y);
        images.push_back(b.element_at(candidates[pick(rng, candidates.size())]));
    }
    return FuncTable::hom(a, b, images);
}

// Mix of map shapes so the corpus spans degrees instead of clustering at
// the generic maximum.
FuncTable random_structured(Rng& rng, const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    switch (pick(rng, 8)) {
    case 0: return FuncTable::constant(a, b, random_element(rng, b));
    case 1: return random_hom(rng, a, b);
    case 2: return FuncTable::delta(a, b, random_element(rng, a), random_element(rng, b));
    case 3: return random_hom(rng, a, b).pointwise_add(
                 FuncTable::delta(a, b, random_element(rng, a), random_element(rng, b)));
    case 4: return random_map(rng, a, b).difference(random_element(rng, a));
    default: return random_map(rng, a, b);
    }
}

// ---------------------------------------------------------------------------
// Suites

void suite_structure(SuiteContext& cx) {
    std::uint64_t cap = std::min<std::uint64_t>(cx.budget.max_group_order, 64);
    for (const FiniteAbelianGroup& g : enumerate_abelian_groups(cap)) {
        std::uint64_t max_ord = 1;
        for (std::uint64_t i = 0; i < g.order(); ++i)
            max_ord = std::max(max_ord, g.order_of(g.element_at(i)));
        cx.check(g.exponent() == max_ord, "A=" + g.str(), std::to_string(g.exponent()),
                 std::to_string(max_ord), "exp(A) = max order of an element");

        FiniteAbelianGroup canon = g.canonicalized();
        cx.check(canon.is_canonical() && canon.order() == g.order() &&
                     canon.canonicalized() == canon,
                 "A=" + g.str(), "canonical, same order, idempotent", canon.str(),
                 "canonicalization is idempotent and order-preserving");

        GroupDescriptor d = GroupDescriptor::of(g);
        cx.check(GroupDescriptor::parse(d.str()) == d, "spec=" + d.str(), d.str(),
                 GroupDescriptor::parse(d.str()).str(), "parse(render(A)) = A");

        StructureStats st = d.stats();
        cx.check(st.exponent == ExtNat::finite(g.exponent()) && st.is_finite && st.is_torsion,
                 "A=" + g.str(), std::to_string(g.exponent()), st.exponent.str(),
                 "descriptor stats agree with the concrete group");

        // Reassembling the listed primary components gives the group back.
        std::map<std::uint64_t, PrimaryPart> parts;
        for (const auto& [p, part] : d.primary_parts()) {
            GroupDescriptor comp = d.primary_component(p);
            for (const auto& [q, qpart] : comp.primary_parts()) parts[q] = qpart;
        }
        cx.check(GroupDescriptor(0, parts) == d, "A=" + g.str(), d.str(),
                 GroupDescriptor(0, parts).str(),
                 "primary components over listed primes reassemble A");
    }

    // hom_is_trivial against exhaustive generator-image search.
    auto small = enumerate_abelian_groups(std::min<std::uint64_t>(cap, 8));
    for (const FiniteAbelianGroup& a : small) {
        for (const FiniteAbelianGroup& b : small) {
            bool exists_nonzero = false;
            std::vector<std::uint64_t> images(a.arity(), 0);
            while (true) {
                bool valid = true;
                bool nonzero = false;
                for (std::size_t i = 0; i < a.arity() && valid; ++i) {
                    if (a.factors()[i] % b.order_of(b.element_at(images[i])) != 0) valid = false;
                    if (images[i] != 0) nonzero = true;
                }
                if (valid && nonzero) {
                    exists_nonzero = true;
                    break;
                }
                std::size_t i = 0;
                for (; i < images.size(); ++i) {
                    if (++images[i] < b.order()) break;
                    images[i] = 0;
                }
                if (i == images.size()) break;
            }
            bool predicted = hom_is_trivial(GroupDescriptor::of(a), GroupDescriptor::of(b));
            cx.check(predicted == !exists_nonzero, "A=" + a.str() + ", B=" + b.str(),
                     exists_nonzero ? "nontrivial hom exists" : "Hom(A,B)=0",
                     predicted ? "Hom(A,B)=0" : "nontrivial hom exists",
                     "Hom(A,B)=0 iff A torsion and no prime is shared by A and B");
        }
    }
}

void suite_lemma_0_0(SuiteContext& cx) {
    Rng rng(cx.budget.seed);
    auto pairs = all_pairs(cx.budget.max_group_order);
    for (std::uint32_t i = 0; i < cx.budget.corpus_size; ++i) {
        const auto& [a, b] = pairs[i % pairs.size()];
        FuncTable f = random_structured(rng, a, b);
        GroupElement sh = random_element(rng, a);
        FuncTable iter = f;
        for (std::uint64_t n = 0; n <= 6; ++n) {
            FuncTable direct = f.iterated_difference_binomial(sh, n);
            cx.check(direct == iter, table_str(f) + ", a idx " + std::to_string(a.index_of(sh)) +
                         ", n=" + std::to_string(n),
                     "binomial form equals iterated differences", "tables differ",
                     "Delta_a^n f(x) = sum_j (-1)^(n-j) C(n,j) f(x+ja)");
            iter = iter.difference(sh);
        }
    }
}

void suite_degree_drop(SuiteContext& cx) {
    Rng rng(cx.budget.seed);
    auto pairs = matched_pairs(cx.budget.max_group_order);
    std::uint32_t done = 0;
    for (std::uint32_t it = 0; done < cx.budget.corpus_size && it < cx.budget.corpus_size * 6; ++it) {
        const auto& [a, b] = pairs[it % pairs.size()];
        FuncTable f = random_structured(rng, a, b);
        ExtNat d = fdeg(f);
        if (!d.is_finite() || d.finite_value() == 0) continue;
        ++done;
        std::uint64_t n = d.finite_value();
        ExtNat max_drop = ExtNat::neg_infinity();
        bool all_below = true;
        for (std::uint64_t ai = 0; ai < a.order(); ++ai) {
            ExtNat dd = fdeg(f.difference(a.element_at(ai)));
            max_drop = ExtNat::max(max_drop, dd);
            if (!(dd <= ExtNat::finite(n - 1))) all_below = false;
        }
        cx.check(all_below && max_drop == ExtNat::finite(n - 1), table_str(f),
                 "max_a fdeg(Delta_a f) = " + std::to_string(n - 1), max_drop.str(),
                 "fdeg(Delta_a f) <= n-1 always, with equality for some a");
    }
}

void suite_subadditivity(SuiteContext& cx) {
    Rng rng(cx.budget.seed);
    auto pairs = all_pairs(cx.budget.max_group_order);
    for (std::uint32_t i = 0; i < cx.budget.corpus_size; ++i) {
        const auto& [a, b] = pairs[i % pairs.size()];
        FuncTable f = random_structured(rng, a, b);
        FuncTable g = random_structured(rng, a, b);
        ExtNat df = fdeg(f), dg = fdeg(g), ds = fdeg(f.pointwise_add(g));
        cx.check(ds <= ExtNat::max(df, dg), table_str(f) + " + " + table_str(g),
                 "<= max(" + df.str() + "," + dg.str() + ")", ds.str(),
                 "fdeg(f+g) <= max(fdeg f, fdeg g)");
    }
}

void suite_functoriality(SuiteContext& cx) {
    Rng rng(cx.budget.seed);
    auto pairs = all_pairs(cx.budget.max_group_order);
    auto groups = nontrivial_groups(std::min<std::uint64_t>(cx.budget.max_group_order, 8));
    for (std::uint32_t i = 0; i < cx.budget.corpus_size; ++i) {
        const auto& [a, b] = pairs[i % pairs.size()];
        FuncTable f = random_structured(rng, a, b);
        ExtNat d = fdeg(f);

        // Surjective pullback along the projection (A + Z_k) -> A.
        std::uint64_t k = (i % 2 == 0) ? 2 : 3;
        std::vector<std::uint64_t> ext = a.factors();
        ext.push_back(k);
        FiniteAbelianGroup big(ext);
        std::vector<GroupElement> proj_images;
        for (std::size_t c = 0; c < a.arity(); ++c) proj_images.push_back(a.generator(c));
        proj_images.push_back(a.zero());
        FuncTable eps = FuncTable::hom(big, a, proj_images);
        ExtNat dpull = fdeg(compose_pre(f, eps));
        cx.check(dpull == d, table_str(f) + ", eps: " + big.str() + "->>" + a.str(), d.str(),
                 dpull.str(), "fdeg(f o eps) = fdeg(f) for surjective eps");

        // Arbitrary pullback only bounds the degree.
        const FiniteAbelianGroup& a2 = groups[pick(rng, groups.size())];
        FuncTable eps2 = random_hom(rng, a2, a);
        ExtNat dpull2 = fdeg(compose_pre(f, eps2));
        cx.check(dpull2 <= d, table_str(f) + ", eps: " + a2.str() + "->" + a.str(),
                 "<= " + d.str(), dpull2.str(), "fdeg(f o eps) <= fdeg(f)");

        // Injective pushforward along B -> B + Z_k.
        std::vector<std::uint64_t> bext = b.factors();
        bext.push_back(k);
        FiniteAbelianGroup bigb(bext);
        std::vector<GroupElement> inc_images;
        for (std::size_t c = 0; c < b.arity(); ++c) {
            GroupElement e = bigb.zero();
            e.coords[c] = 1;
            inc_images.push_back(e);
        }
        FuncTable mu = FuncTable::hom(b, bigb, inc_images);
        ExtNat dpush = fdeg(compose_post(mu, f));
        cx.check(dpush == d, table_str(f) + ", mu: " + b.str() + ">->" + bigb.str(), d.str(),
                 dpush.str(), "fdeg(mu o f) = fdeg(f) for injective mu");

        // Arbitrary pushforward only bounds the degree.
        const FiniteAbelianGroup& b2 = groups[pick(rng, groups.size())];
        FuncTable mu2 = random_hom(rng, b, b2);
        ExtNat dpush2 = fdeg(compose_post(mu2, f));
        cx.check(dpush2 <= d, table_str(f) + ", mu: " + b.str() + "->" + b2.str(),
                 "<= " + d.str(), dpush2.str(), "fdeg(mu o f) <= fdeg(f)");
    }
}

void suite_restriction(SuiteContext& cx) {
    Rng rng(cx.budget.seed);
    auto pairs = all_pairs(cx.budget.max_group_order);
    for (std::uint32_t i = 0; i < cx.budget.corpus_size; ++i) {
        const auto& [a, b] = pairs[i % pairs.size()];
        FuncTable f = random_structured(rng, a, b);
        ExtNat d = fdeg(f);

        // Cyclic subgroup generated by a random element.
        GroupElement gen = random_element(rng, a);
        std::uint64_t ord = a.order_of(gen);
        if (ord >= 2) {
            FiniteAbelianGroup h({ord});
            FuncTable incl = FuncTable::hom(h, a, {gen});
            ExtNat dr = fdeg(compose_pre(f, incl));
            cx.check(dr <= d, table_str(f) + ", H=<elem " + std::to_string(a.index_of(gen)) + ">",
                     "<= " + d.str(), dr.str(), "fdeg(f restricted to a subgroup) <= fdeg(f)");
        }

        // Coordinate subgroup: drop one factor.
        if (a.arity() >= 2) {
            std::size_t drop = static_cast<std::size_t>(pick(rng, a.arity()));
            std::vector<std::uint64_t> hf;
            std::vector<GroupElement> images;
            for (std::size_t c = 0; c < a.arity(); ++c) {
                if (c == drop) continue;
                hf.push_back(a.factors()[c]);
                images.push_back(a.generator(c));
            }
            FiniteAbelianGroup h(hf);
            FuncTable incl = FuncTable::hom(h, a, images);
            ExtNat dr = fdeg(compose_pre(f, incl));
            cx.check(dr <= d, table_str(f) + ", drop factor " + std::to_string(drop),
                     "<= " + d.str(), dr.str(), "fdeg(f restricted to a subgroup) <= fdeg(f)");
        }
    }
}

void suite_products(SuiteContext& cx) {
    Rng rng(cx.budget.seed);
    std::vector<GroupPair> pairs;
    for (auto& pr : all_pairs(cx.budget.max_group_order))
        if (prime_divisors(pr.second.order()).size() >= 2) pairs.push_back(std::move(pr));
    for (std::uint32_t i = 0; i < cx.budget.corpus_size; ++i) {
        const auto& [a, b] = pairs[i % pairs.size()];
        FuncTable f = random_structured(rng, a, b);
        ExtNat d = fdeg(f);
        ExtNat comp_max = ExtNat::neg_infinity();
        for (std::uint64_t p : prime_divisors(b.order())) {
            PrimarySplit split(b, p);
            FuncTable proj(a, split.part());
            for (std::uint64_t x = 0; x < a.order(); ++x)
                proj.set_value_index(
                    x, split.part().index_of(split.project_part(b.element_at(f.value_index(x)))));
            comp_max = ExtNat::max(comp_max, fdeg(proj));
        }
        cx.check(d == comp_max, table_str(f), comp_max.str(), d.str(),
                 "fdeg(f) = max_p fdeg(pi_p o f)");
    }
}

void suite_sums(SuiteContext& cx) {
    Rng rng(cx.budget.seed);
    std::vector<GroupPair> pairs;
    for (auto& pr : matched_pairs(cx.budget.max_group_order))
        if (pr.first.order() <= 6) pairs.push_back(std::move(pr));
    const std::uint64_t cap = 16;
    for (std::uint32_t i = 0; i < cx.budget.corpus_size; ++i) {
        const auto& [a, b] = pairs[i % pairs.size()];
        FuncTable f = random_structured(rng, a, b);
        ExtNat d = fdeg(f);
        ScanResult gen = fdeg_scan_generators(f, cap);
        ScanResult tuples = fdeg_bruteforce(f, cap);
        bool ok = !gen.exceeded && !tuples.exceeded && gen.value == d && tuples.value == d;
        cx.check(ok, table_str(f), d.str(),
                 (gen.exceeded ? std::string("exceeded") : gen.value.str()) + " / " +
                     (tuples.exceeded ? std::string("exceeded") : tuples.value.str()),
                 "generator-multiset products of size d detect fdeg >= d");
    }
}

void suite_diagonalization(SuiteContext& cx) {
    Rng rng(cx.budget.seed);
    std::vector<FiniteAbelianGroup> twos{FiniteAbelianGroup({2}), FiniteAbelianGroup({4}),
                                         FiniteAbelianGroup({2, 2})};
    std::vector<FiniteAbelianGroup> threes{FiniteAbelianGroup({3}), FiniteAbelianGroup({9})};
    for (std::uint32_t i = 0; i < cx.budget.corpus_size; ++i) {
        // Hom(A_2, B_3) = Hom(A_3, B_2) = 0, so degrees diagonalize.
        const auto& a1 = twos[pick(rng, twos.size())];
        const auto& b1 = twos[pick(rng, twos.size())];
        const auto& a2 = threes[pick(rng, threes.size())];
        const auto& b2 = threes[pick(rng, threes.size())];
        FuncTable f1 = random_structured(rng, a1, b1);
        FuncTable f2 = random_structured(rng, a2, b2);
        std::vector<FuncTable> parts{f1, f2};
        FuncTable joined = diagonal_join(parts);
        ExtNat expect = ExtNat::max(fdeg(f1), fdeg(f2));
        ExtNat got = fdeg(joined);
        cx.check(got == expect, table_str(f1) + " (+) " + table_str(f2), expect.str(), got.str(),
                 "fdeg(join of components) = max of component degrees");
    }

    // Decomposition direction on Z2+Z3 -> Z2+Z3: finite degree forces the
    // diagonal form.
    FiniteAbelianGroup a({2, 3}), b({2, 3});
    for (std::uint32_t i = 0; i < cx.budget.corpus_size; ++i) {
        FuncTable f = i % 2 == 0 ? random_map(rng, a, b) : random_structured(rng, a, b);
        ExtNat d = fdeg(f);
        if (!(d < ExtNat::infinity())) continue;
        FuncTable c1(FiniteAbelianGroup({2}), FiniteAbelianGroup({2}));
        FuncTable c2(FiniteAbelianGroup({3}), FiniteAbelianGroup({3}));
        bool diagonal = true;
        for (std::uint64_t x1 = 0; x1 < 2 && diagonal; ++x1) {
            std::uint64_t base = f.value_index(x1 * 3) / 3;
            for (std::uint64_t x2 = 0; x2 < 3; ++x2)
                if (f.value_index(x1 * 3 + x2) / 3 != base) diagonal = false;
            c1.set_value_index(x1, base);
        }
        for (std::uint64_t x2 = 0; x2 < 3 && diagonal; ++x2) {
            std::uint64_t base = f.value_index(x2) % 3;
            for (std::uint64_t x1 = 0; x1 < 2; ++x1)
                if (f.value_index(x1 * 3 + x2) % 3 != base) diagonal = false;
            c2.set_value_index(x2, base);
        }
        std::vector<FuncTable> parts{c1, c2};
        bool ok = diagonal && diagonal_join(parts) == f &&
                  ExtNat::max(fdeg(c1), fdeg(c2)) == d;
        cx.check(ok, table_str(f), "diagonal with fdeg = max of components",
                 diagonal ? "diagonal" : "not diagonal",
                 "every finite-degree map on a primary-split pair is diagonal");
    }
}

void suite_primary_split(SuiteContext& cx) {
    Rng rng(cx.budget.seed);
    std::vector<GroupPair> pairs;
    for (auto& pr : all_pairs(cx.budget.max_group_order))
        if (prime_divisors(pr.first.order()).size() >= 2 &&
            prime_divisors(pr.second.order()).size() >= 2)
            pairs.push_back(std::move(pr));
    for (std::uint32_t i = 0; i < cx.budget.corpus_size; ++i) {
        const auto& [a, b] = pairs[i % pairs.size()];
        // Assemble f from independent per-prime component maps.
        FuncTable f(a, b);
        ExtNat expect = ExtNat::neg_infinity();
        std::vector<std::uint64_t> acc(a.order(), 0);
        for (std::uint64_t p : prime_divisors(b.order())) {
            PrimarySplit sa(a, p);
            PrimarySplit sb(b, p);
            FuncTable fp = random_structured(rng, sa.part(), sb.part());
            expect = ExtNat::max(expect, fdeg(fp));
            for (std::uint64_t x = 0; x < a.order(); ++x) {
                GroupElement xp = sa.project_part(a.element_at(x));
                GroupElement yp = fp.value_at(xp);
                std::uint64_t y = b.index_of(sb.combine(yp, sb.complement().zero()));
                acc[x] = b.index_add(acc[x], y);
            }
        }
        for (std::uint64_t x = 0; x < a.order(); ++x) f.set_value_index(x, acc[x]);
        ExtNat got = fdeg(f);
        cx.check(got == expect, table_str(f), expect.str(), got.str(),
                 "fdeg of a primary-diagonal map = max of its p-component degrees");
    }
}

void suite_module_action(SuiteContext& cx) {
    Rng rng(cx.budget.seed);
    auto pairs = all_pairs(cx.budget.max_group_order);
    for (std::uint32_t i = 0; i < cx.budget.corpus_size; ++i) {
        const auto& [a, b] = pairs[i % pairs.size()];
        std::uint64_t m = b.exponent();
        if (m < 2) continue;
        FuncTable f = random_structured(rng, a, b);
        GroupElement sh = random_element(rng, a);

        GroupRingElement tau = GroupRingElement::basis(m, a, sh);
        FuncTable shifted = tau.act(f);
        cx.check(shifted == f.shifted(sh),
                 table_str(f) + ", a idx " + std::to_string(a.index_of(sh)),
                 "[a] f = f(. + a)", "tables differ", "([a] f)(x) = f(x+a)");
        cx.check(fdeg(shifted) == fdeg(f), table_str(f), fdeg(f).str(), fdeg(shifted).str(),
                 "fdeg([a] f) = fdeg(f)");

        GroupRingElement delta = GroupRingElement::delta(m, a, sh);
        cx.check(delta.act(f) == f.difference(sh), table_str(f), "Delta_a f by both routes",
                 "tables differ", "([a]-[0]) f = Delta_a f");
        cx.check(delta.augmentation() == 0, "a idx " + std::to_string(a.index_of(sh)), "0",
                 delta.augmentation().get_str(), "eps(Delta_a) = 0");

        // tau_a applied to a delta function relocates it to -a.
        GroupElement val = random_element(rng, b);
        FuncTable d0 = FuncTable::delta(a, b, a.zero(), val);
        cx.check(tau.act(d0) == FuncTable::delta(a, b, a.neg(sh), val),
                 "a idx " + std::to_string(a.index_of(sh)), "delta at -a", "elsewhere",
                 "tau_a delta_{0,b} = delta_{-a,b}");

        // Augmentation is a ring homomorphism on random sparse elements.
        GroupRingElement x(m, a), y(m, a);
        for (int t = 0; t < 3; ++t) {
            x.add_term(random_element(rng, a), mpz_class(pick(rng, 2 * m)) - mpz_class(m));
            y.add_term(random_element(rng, a), mpz_class(pick(rng, 2 * m)) - mpz_class(m));
        }
        mpz_class ex = x.augmentation(), ey = y.augmentation();
        mpz_class mod(static_cast<unsigned long>(m));
        mpz_class prod = ex * ey;
        mpz_fdiv_r(prod.get_mpz_t(), prod.get_mpz_t(), mod.get_mpz_t());
        mpz_class sum = ex + ey;
        mpz_fdiv_r(sum.get_mpz_t(), sum.get_mpz_t(), mod.get_mpz_t());
        cx.check((x * y).augmentation() == prod && (x + y).augmentation() == sum,
                 "random sparse x, y in Z_" + std::to_string(m) + "[" + a.str() + "]",
                 "eps multiplicative and additive", "mismatch",
                 "eps(xy) = eps(x)eps(y), eps(x+y) = eps(x)+eps(y)");
    }
}

void suite_delta_vs_nu(SuiteContext& cx) {
    for (const FiniteAbelianGroup& a : nontrivial_groups(cx.budget.max_group_order)) {
        auto fac = factorize(a.order());
        if (fac.size() != 1) continue;
        std::uint64_t p = fac.front().first;
        for (std::uint32_t beta = 1; beta <= cx.budget.max_beta; ++beta) {
            std::uint64_t m = checked_pow(p, beta);
            // Codomains sharing the exponent p^beta must give one answer.
            std::vector<GroupDescriptor> codomains{GroupDescriptor::cyclic(m)};
            if (beta > 1) codomains.push_back(GroupDescriptor::parse(
                "Z" + std::to_string(m) + "xZ" + std::to_string(p)));
            ExtNat scanned = nilpotency_index(m, a, 64);
            ExtNat predicted = predicted_nu(m, GroupDescriptor::of(a));
            cx.check(scanned == predicted,
                     "m=" + std::to_string(m) + ", A=" + a.str(), predicted.str(), scanned.str(),
                     "nu(Z_m[A]) scan = delta(A, Z_m) + 1");
            for (const GroupDescriptor& bd : codomains) {
                DeltaResult dr = delta_sup(GroupDescriptor::of(a), bd);
                cx.check(dr.value.plus(1) == scanned,
                         "A=" + a.str() + ", B=" + bd.str(), scanned.str(), dr.value.plus(1).str(),
                         "delta(A,B) = nu(Z_{e(B)}[A]) - 1");
            }
        }
    }
}

void suite_weisman(SuiteContext& cx) {
    for (std::uint64_t p : {2ull, 3ull}) {
        for (std::uint32_t alpha = 1; alpha <= 2; ++alpha) {
            for (std::uint32_t beta = 1; beta <= std::min<std::uint32_t>(3, cx.budget.max_beta);
                 ++beta) {
                std::uint64_t k = checked_pow(p, alpha);
                std::uint64_t m = checked_pow(p, beta);
                std::uint64_t thr = weisman_threshold(p, alpha, beta);
                std::uint64_t boundary = weisman_boundary_value(p, beta);
                std::string base = "p=" + std::to_string(p) + ", alpha=" + std::to_string(alpha) +
                                   ", beta=" + std::to_string(beta);
                for (std::uint64_t j = 0; j < k; ++j) {
                    for (std::uint64_t n = thr; n <= thr + 4; ++n) {
                        mpz_class exact = weisman_sum(k, static_cast<std::int64_t>(j), n);
                        std::uint64_t red = weisman_sum_mod(k, static_cast<std::int64_t>(j), n, m);
                        bool ok = red == 0 && mpz_fdiv_ui(exact.get_mpz_t(), m) == 0;
                        cx.check(ok, base + ", j=" + std::to_string(j) + ", n=" + std::to_string(n),
                                 "0", std::to_string(red),
                                 "M_{p^a}(j,n) = 0 mod p^b for n >= (b(p-1)+1)p^(a-1)");
                    }
                    std::uint64_t at = weisman_sum_mod(k, static_cast<std::int64_t>(j), thr - 1, m);
                    cx.check(at == boundary, base + ", j=" + std::to_string(j) + ", n=thr-1",
                             std::to_string(boundary), std::to_string(at),
                             "M_{p^a}(j, threshold-1) = (-p)^(b-1) mod p^b");
                }
            }
        }
    }
}

void suite_wilson(SuiteContext& cx) {
    for (std::uint64_t p : {2ull, 3ull}) {
        for (std::uint32_t alpha = 1; alpha <= 3 && checked_pow(p, alpha) <= 27; ++alpha) {
            for (std::uint32_t beta = 1; beta <= std::min<std::uint32_t>(3, cx.budget.max_beta);
                 ++beta) {
                WilsonCheck w = wilson_check(p, alpha, beta);
                std::string in = "p=" + std::to_string(p) + ", alpha=" + std::to_string(alpha) +
                                 ", beta=" + std::to_string(beta);
                cx.check(w.equal, in, "(t-1)^(thr-1) = (-p)^(b-1) sum_i t^i", "sides differ",
                         "Wilson congruence in Z_{p^b}[Z_{p^a}]");
                cx.check(w.vanishes_at_threshold, in, "(t-1)^thr = 0", "nonzero",
                         "(t-1)^((b(p-1)+1)p^(a-1)) vanishes");
            }
        }
    }
}

void suite_main_formula(SuiteContext& cx) {
    for (const FiniteAbelianGroup& a : nontrivial_groups(cx.budget.max_group_order)) {
        auto fac = factorize(a.order());
        if (fac.size() != 1) continue;
        std::uint64_t p = fac.front().first;
        if (p > 3) continue;
        for (std::uint32_t beta = 1; beta <= cx.budget.max_beta; ++beta) {
            std::uint64_t m = checked_pow(p, beta);
            ExtNat nu = nilpotency_index(m, a, 64);
            DeltaResult dr = delta_sup(GroupDescriptor::of(a), GroupDescriptor::cyclic(m));
            bool ok = nu.is_finite() && dr.case_tag == DeltaCase::p_group_formula &&
                      ExtNat::finite(nu.finite_value() - 1) == dr.value;
            cx.check(ok, "A=" + a.str() + ", m=" + std::to_string(m), dr.value.str(),
                     nu.is_finite() ? std::to_string(nu.finite_value() - 1) : nu.str(),
                     "nu scan - 1 = sum_j (p^(a_j)-1) + (b-1)(p-1)p^(a_1-1)");
        }
    }
}

void suite_sum_theorem(SuiteContext& cx) {
    for (std::uint64_t p : {2ull, 3ull}) {
        // All descending exponent multisets with sum of p^(a_i) <= max order.
        std::vector<std::vector<std::uint32_t>> multisets;
        std::vector<std::uint32_t> cur;
        std::function<void(std::uint64_t, std::uint32_t)> rec = [&](std::uint64_t left,
                                                                    std::uint32_t max_a) {
            if (!cur.empty()) multisets.push_back(cur);
            for (std::uint32_t a = max_a; a >= 1; --a) {
                std::uint64_t q = checked_pow(p, a);
                if (q > left) continue;
                cur.push_back(a);
                rec(left - q, a);
                cur.pop_back();
            }
        };
        std::uint32_t amax = 0;
        while (checked_pow(p, amax + 1) <= cx.budget.max_group_order + 4) ++amax;
        rec(std::max<std::uint64_t>(cx.budget.max_group_order, 16), amax);

        for (const auto& alphas : multisets) {
            for (std::uint32_t beta = 1; beta <= cx.budget.max_beta; ++beta) {
                std::uint64_t via_max = sum_theorem_max(p, alphas, beta);
                std::vector<std::uint64_t> factors;
                for (std::uint32_t a : alphas) factors.push_back(checked_pow(p, a));
                DeltaResult dr = delta_sup(GroupDescriptor::of(FiniteAbelianGroup(factors)),
                                           GroupDescriptor::cyclic(checked_pow(p, beta)));
                std::ostringstream in;
                in << "p=" << p << ", alphas=";
                for (std::uint32_t a : alphas) in << a << " ";
                in << "beta=" << beta;
                cx.check(ExtNat::finite(via_max) == dr.value, in.str(), dr.value.str(),
                         std::to_string(via_max),
                         "composition maximum equals the closed form, collapsing at "
                         "(b-1, 0, ..., 0)");
            }
        }
    }
}

void suite_delta_prop(SuiteContext& cx) {
    std::uint64_t cap = std::min<std::uint64_t>(cx.budget.max_group_order, 9);
    for (const FiniteAbelianGroup& a : nontrivial_groups(cap)) {
        auto fac = factorize(a.order());
        if (fac.size() != 1) continue;
        std::uint64_t p = fac.front().first;
        for (std::uint32_t beta = 1; checked_pow(p, beta) <= 9; ++beta) {
            FiniteAbelianGroup b({checked_pow(p, beta)});
            DeltaResult dr = delta_sup(GroupDescriptor::of(a), GroupDescriptor::of(b));
            for (std::uint64_t ai = 0; ai < a.order(); ++ai) {
                for (std::uint64_t bi = 0; bi < b.order(); ++bi) {
                    if (b.order_of(b.element_at(bi)) != b.exponent()) continue;
                    ExtNat d = fdeg(FuncTable::delta(a, b, a.element_at(ai), b.element_at(bi)));
                    cx.check(d == dr.value,
                             "A=" + a.str() + ", B=" + b.str() + ", a=" + std::to_string(ai) +
                                 ", b=" + std::to_string(bi),
                             dr.value.str(), d.str(),
                             "fdeg(delta_{a,b}) = delta(A,B) for b of maximal order");
                }
            }
        }
    }
}

void suite_degree_sets(SuiteContext& cx) {
    std::vector<GroupPair> pairs{
        {FiniteAbelianGroup({2}), FiniteAbelianGroup({2})},
        {FiniteAbelianGroup({3}), FiniteAbelianGroup({2})},
        {FiniteAbelianGroup({2}), FiniteAbelianGroup({4})},
        {FiniteAbelianGroup({2}), FiniteAbelianGroup({3})},
        {FiniteAbelianGroup({4}), FiniteAbelianGroup({2})},
        {FiniteAbelianGroup({2, 2}), FiniteAbelianGroup({2})},
        {FiniteAbelianGroup({3}), FiniteAbelianGroup({3})},
        {FiniteAbelianGroup({2}), FiniteAbelianGroup({6})},
        {FiniteAbelianGroup({6}), FiniteAbelianGroup({2})},
    };
    for (const auto& [a, b] : pairs) {
        // Exhaustive sweep of every map A -> B.
        std::set<ExtNat, std::less<>> degrees;
        std::vector<std::uint64_t> vals(a.order(), 0);
        while (true) {
            FuncTable f(a, b);
            for (std::uint64_t i = 0; i < a.order(); ++i) f.set_value_index(i, vals[i]);
            degrees.insert(fdeg(f));
            std::size_t i = 0;
            for (; i < vals.size(); ++i) {
                if (++vals[i] < b.order()) break;
                vals[i] = 0;
            }
            if (i == vals.size()) break;
        }
        DegreeSet ds = degree_set(GroupDescriptor::of(a), GroupDescriptor::of(b));
        ExtNat max_finite = ExtNat::neg_infinity();
        bool saw_inf = false;
        bool downward_closed = true;
        for (ExtNat d : degrees) {
            if (d.is_infinity())
                saw_inf = true;
            else if (d.is_finite())
                max_finite = ExtNat::max(max_finite, d);
        }
        if (max_finite.is_finite())
            for (std::uint64_t n = 0; n <= max_finite.finite_value(); ++n)
                if (!degrees.count(ExtNat::finite(n))) downward_closed = false;
        std::string in = "A=" + a.str() + ", B=" + b.str();
        cx.check(ds.finite_sup == max_finite, in, ds.finite_sup.str(), max_finite.str(),
                 "finite part of D(A,B) tops out at delta_circ");
        cx.check(ds.contains_inf == saw_inf, in, ds.contains_inf ? "inf in D" : "inf not in D",
                 saw_inf ? "inf attained" : "inf not attained",
                 "inf in D(A,B) iff no prime makes both groups p-groups with A finite");
        cx.check(downward_closed && degrees.count(ExtNat::neg_infinity()) > 0, in,
                 "downward-closed finite part containing -inf", downward_closed ? "ok" : "gap",
                 "D(A,B) minus {inf} = {n <= delta_circ}");
    }
}

void suite_oracle_agreement(SuiteContext& cx) {
    Rng rng(cx.budget.seed);
    auto pairs = all_pairs(std::min<std::uint64_t>(cx.budget.max_group_order, 8));
    for (std::uint32_t i = 0; i < cx.budget.corpus_size; ++i) {
        const auto& [a, b] = pairs[i % pairs.size()];
        FuncTable f = random_structured(rng, a, b);
        ExtNat d = fdeg(f);
        if (d.is_infinity()) {
            ScanResult r = fdeg_bruteforce(f, 4);
            DegreeSet ds = degree_set(GroupDescriptor::of(a), GroupDescriptor::of(b));
            cx.check(r.exceeded && ds.contains_inf, table_str(f), "oracle exceeds every cap",
                     r.exceeded ? "exceeded, inf predicted" : "oracle found a finite degree",
                     "fdeg = inf only where the case analysis admits it");
        } else {
            std::uint64_t cap = d.is_finite() ? d.finite_value() + 2 : 2;
            ScanResult r = fdeg_bruteforce(f, cap);
            cx.check(!r.exceeded && r.value == d, table_str(f), d.str(),
                     r.exceeded ? std::string("exceeded") : r.value.str(),
                     "fdeg agrees with the all-tuples definition");
        }
    }
}

using SuiteFn = void (*)(SuiteContext&);

struct SuiteEntry {
    const char* name;
    SuiteFn fn;
    std::vector<std::string> coverage;
};

const std::vector<SuiteEntry>& registry() {
    static const std::vector<SuiteEntry> entries{
        {"structure", suite_structure,
         {"parse_group_spec", "structure_stats", "primary_component", "hom_is_trivial",
          "to_finite_group", "elem_order"}},
        {"lemma_0_0", suite_lemma_0_0, {"iterated_difference_binomial", "difference"}},
        {"degree_drop", suite_degree_drop, {"fdeg", "difference"}},
        {"subadditivity", suite_subadditivity, {"pointwise_add", "fdeg"}},
        {"functoriality", suite_functoriality, {"compose_pre", "compose_post", "make_hom", "fdeg"}},
        {"restriction", suite_restriction, {"compose_pre", "make_hom", "fdeg"}},
        {"products", suite_products, {"fdeg", "primary_component"}},
        {"sums", suite_sums, {"fdeg", "fdeg_bruteforce", "fdeg_scan_generators"}},
        {"diagonalization", suite_diagonalization, {"diagonal_join", "fdeg"}},
        {"primary_split", suite_primary_split, {"fdeg", "diagonal_join"}},
        {"module_action", suite_module_action,
         {"act", "delta_elem", "augmentation", "gr_mul", "gr_add", "fdeg"}},
        {"delta_vs_nu", suite_delta_vs_nu,
         {"nilpotency_index", "ideal_power_is_zero", "predicted_nu", "delta_sup"}},
        {"weisman", suite_weisman, {"weisman_M", "weisman_M_mod", "weisman_threshold"}},
        {"wilson", suite_wilson, {"wilson_check", "gr_pow"}},
        {"main_formula", suite_main_formula,
         {"nilpotency_index", "ideal_power_is_zero", "delta_sup"}},
        {"sum_theorem", suite_sum_theorem, {"sum_theorem_max", "delta_cyclic", "delta_sup"}},
        {"delta_prop", suite_delta_prop, {"make_delta", "fdeg", "delta_sup"}},
        {"degree_sets", suite_degree_sets, {"degree_set", "delta_circ", "fdeg"}},
        {"oracle_agreement", suite_oracle_agreement, {"fdeg", "fdeg_bruteforce", "degree_set"}},
    };
    return entries;
}

} // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const SuiteEntry& e : registry()) out.emplace_back(e.name);
    return out;
}

SuiteReport run_suite(std::string_view name, const VerifyBudget& budget) {
    for (const SuiteEntry& e : registry()) {
        if (name != e.name) continue;
        SuiteContext cx{budget, SuiteReport{e.name, 0, {}, 0.0}};
        auto start = std::chrono::steady_clock::now();
        e.fn(cx);
        auto stop = std::chrono::steady_clock::now();
        cx.report.wall_time_ms =
            std::chrono::duration<double, std::milli>(stop - start).count();
        return std::move(cx.report);
    }
    throw std::invalid_argument("unknown suite id: " + std::string(name));
}

std::vector<SuiteReport> run_all_suites(const VerifyBudget& budget) {
    std::vector<SuiteReport> out;
    for (const SuiteEntry& e : registry()) out.push_back(run_suite(e.name, budget));
    return out;
}

std::vector<std::pair<std::string, std::vector<std::string>>> suite_coverage() {
    std::vector<std::pair<std::string, std::vector<std::string>>> out;
    for (const SuiteEntry& e : registry()) out.emplace_back(e.name, e.coverage);
    return out;
}

} // namespace fdcalc
