#include "permring/verify.hpp"

#include "permring/coeff_graph.hpp"
#include "permring/cup_ring.hpp"
#include "permring/homology.hpp"
#include "permring/rewrite.hpp"
#include "permring/worker_pool.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace permring {

void SuiteResult::fail(std::string witness) {
  passed = false;
  if (witnesses.size() < 10) witnesses.push_back(std::move(witness));
}

void CoefficientMonitor::record(const Rational& c, const std::string& where) {
  ++observed;
  if (c != 0 && c != 1 && c != -1) unusual.try_emplace(c, where);
}

namespace {

IndexSet first_labels(int m) {
  std::vector<Label> e(m);
  std::iota(e.begin(), e.end(), 1);
  return IndexSet(std::move(e));
}

std::vector<BlockPerm> all_perms(const IndexSet& s) {
  std::vector<Label> e(s.elements().begin(), s.elements().end());
  std::vector<BlockPerm> out;
  do out.push_back(BlockPerm::from_entries(e));
  while (std::next_permutation(e.begin(), e.end()));
  return out;
}

BlockPerm random_perm(const IndexSet& s, std::mt19937_64& rng) {
  std::vector<Label> e(s.elements().begin(), s.elements().end());
  std::shuffle(e.begin(), e.end(), rng);
  return BlockPerm::from_entries(std::move(e));
}

std::size_t pick(std::size_t n, std::mt19937_64& rng) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

std::string pair_str(const BlockPerm& a, const BlockPerm& x) { return "alpha=(" + to_string(a) + ") x=(" + to_string(x) + ")"; }

Rational lookup(const std::map<BlockPerm, Rational>& m, const BlockPerm& k) {
  auto it = m.find(k);
  return it == m.end() ? Rational(0) : it->second;
}

/// All even subsets of [n+1] with at most max_size elements, including ∅.
std::vector<IndexSet> grades_upto(int n, int max_size) {
  std::vector<IndexSet> out;
  for (int k = 0; 2 * k <= max_size; ++k)
    for (auto& s : even_subsets(n, k)) out.push_back(std::move(s));
  return out;
}

/// Ordered splits U = I1 ⊔ I2 with both parts even; empty parts allowed
/// unless `nonempty`.
std::vector<std::pair<IndexSet, IndexSet>> splits(const IndexSet& u, bool nonempty) {
  std::vector<std::pair<IndexSet, IndexSet>> out;
  const std::size_t m = u.size();
  for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << m); ++sel) {
    if (std::popcount(sel) % 2 != 0) continue;
    Mask a = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (sel & (std::uint64_t{1} << i)) a |= bit(u.elements()[i]);
    const Mask b = u.mask() & ~a;
    if (nonempty && (a == 0 || b == 0)) continue;
    out.emplace_back(IndexSet::from_mask(a), IndexSet::from_mask(b));
  }
  return out;
}

void check_coefficients_at(const BlockPerm& x, const std::vector<BlockPerm>& basis, SuiteResult& r,
                           CoefficientMonitor* monitor, const std::vector<BlockPerm>* only = nullptr) {
  const auto memo = topo_coeffs_memo(x);
  const AltVector red = reduce(x);
  for (const auto& a : only ? *only : basis) {
    const Rational w = topo_coeff_walks(a, x);
    const Rational m = lookup(memo, a);
    const Rational c = red.coefficient(a);
    ++r.checked;
    if (monitor) monitor->record(c, pair_str(a, x));
    if (w != m || m != c)
      r.fail(pair_str(a, x) + " walks=" + to_string(w) + " memo=" + to_string(m) + " rewrite=" + to_string(c));
  }
}

}  // namespace

SuiteResult verify_betti(int n, const DiskCache* cache) {
  SuiteResult r{"betti"};
  for (int m = 1; m <= n; ++m) {
    const std::string key = "betti:n=" + std::to_string(m);
    Json table;
    if (cache) {
      if (auto hit = cache->load(key)) table = *hit;
    }
    if (table.is_null()) {
      std::vector<IndexSet> sets;
      for (int k = 0; 2 * k <= m + 1; ++k)
        for (auto& s : even_subsets(m, k)) sets.push_back(std::move(s));
      // Index sets are independent; rows come back in enumeration order.
      auto rows = parallel_map<Json>(sets.size(), default_workers(), [&](std::size_t i) {
        return Json{{"index_set", to_json(sets[i])},
                    {"induced", reduced_betti_numbers(build_induced(m, sets[i]))},
                    {"hat", reduced_betti_numbers(build_hat(m, sets[i]))}};
      });
      table = Json(std::move(rows));
      if (cache) cache->store(key, table);
    }
    std::map<int, Integer> totals;
    for (const auto& row : table) {
      const IndexSet s = index_set_from_json(row.at("index_set"));
      const int k = s.degree();
      const Integer expect = euler_zigzag(2 * k);
      for (const char* which : {"induced", "hat"}) {
        const auto betti = row.at(which).get<std::vector<std::size_t>>();
        for (std::size_t slot = 0; slot < betti.size(); ++slot) {
          const int d = static_cast<int>(slot) - 1;
          const Integer want = d == k - 1 ? expect : Integer(0);
          ++r.checked;
          if (Integer(static_cast<unsigned long>(betti[slot])) != want) {
            std::ostringstream w;
            w << which << " n=" << m << " I={" << s.to_string() << "} d=" << d << " got " << betti[slot] << " want " << want;
            r.fail(w.str());
          }
        }
        if (static_cast<int>(betti.size()) < k + 1) r.fail(std::string(which) + " complex too small for I={" + s.to_string() + "}");
      }
      totals[k] += Integer(static_cast<unsigned long>(row.at("hat").get<std::vector<std::size_t>>().at(k)));
    }
    for (const auto& [k, total] : totals) {
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), m + 1, 2 * k);
      ++r.checked;
      if (total != binom * euler_zigzag(2 * k)) {
        std::ostringstream w;
        w << "n=" << m << " k=" << k << " sum " << total << " != binom*a";
        r.fail(w.str());
      }
    }
  }
  return r;
}

SuiteResult verify_coefficient_methods(int max_exhaustive, int random_size, int trials, std::uint64_t seed,
                                       CoefficientMonitor* monitor) {
  SuiteResult r{"coefficient_methods"};
  for (int size = 2; size <= max_exhaustive; size += 2) {
    const IndexSet s = first_labels(size);
    const auto basis = alt_basis(s);
    for (const auto& x : all_perms(s)) check_coefficients_at(x, basis, r, monitor);
  }
  if (trials > 0 && random_size > 0) {
    std::mt19937_64 rng(seed);
    const IndexSet s = first_labels(random_size);
    const auto basis = alt_basis(s);
    for (int t = 0; t < trials; ++t) {
      const BlockPerm x = random_perm(s, rng);
      const std::vector<BlockPerm> one{basis[pick(basis.size(), rng)]};
      check_coefficients_at(x, basis, r, monitor, &one);
    }
  }
  return r;
}

SuiteResult verify_homology_coefficients(int max_size, CoefficientMonitor* monitor) {
  SuiteResult r{"homology_coefficients"};
  for (int size = 2; size <= max_size; size += 2) {
    const IndexSet s = first_labels(size);
    const auto hat = build_hat(size - 1, s);
    const AltHomologyBasis basis(hat, s);
    for (const auto& x : all_perms(s)) {
      const AltVector h = basis.express(x);
      const AltVector c = reduce(x);
      for (const auto& a : basis.basis()) {
        ++r.checked;
        if (monitor) monitor->record(h.coefficient(a), pair_str(a, x));
      }
      if (h != c) r.fail("x=(" + to_string(x) + ") homology " + to_string(h) + " vs rewrite " + to_string(c));
    }
  }
  return r;
}

SuiteResult verify_rewriting(int max_exhaustive, int random_size, int trials, int max_generators, std::uint64_t seed) {
  SuiteResult r{"rewriting"};
  auto agree = [&r](const BlockPerm& x) {
    ++r.checked;
    const AltVector right = reduce(x, RewriteStrategy::kRightmost);
    const AltVector left = reduce(x, RewriteStrategy::kLeftmost);
    if (right != left) r.fail("x=(" + to_string(x) + ") rightmost " + to_string(right) + " leftmost " + to_string(left));
  };
  for (int size = 2; size <= max_exhaustive; size += 2)
    for (const auto& x : all_perms(first_labels(size))) agree(x);
  if (trials > 0 && random_size > 0) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const IndexSet s = first_labels(random_size);
    for (int t = 0; t < trials; ++t) agree(random_perm(s, rng));
  }
  for (int size = 2; size <= max_generators; size += 2) {
    for (const auto& x : all_perms(first_labels(size))) {
      for (std::size_t b = 0; b < x.blocks(); ++b) {
        ++r.checked;
        if (!reduce(swap_relation(x, b)).is_zero()) r.fail("swap relation at block " + std::to_string(b) + " of (" + to_string(x) + ")");
      }
      for (std::size_t j = 0; j + 1 < x.blocks(); ++j) {
        ++r.checked;
        if (!reduce(garnir_relation(x, j)).is_zero())
          r.fail("garnir relation at junction " + std::to_string(j) + " of (" + to_string(x) + ")");
      }
    }
  }
  return r;
}

SuiteResult verify_ring_axioms(int n, int max_union) {
  SuiteResult r{"ring_axioms"};
  const auto grades = grades_upto(n, max_union);
  std::map<IndexSet, std::vector<BlockPerm>> bases;
  for (const auto& g : grades) bases[g] = alt_basis(g);
  const AltVector one = AltVector::basis(BlockPerm{});

  for (const auto& g : grades)
    for (const auto& a : bases[g]) {
      const AltVector va = AltVector::basis(a);
      r.checked += 2;
      if (cup(one, va) != va || cup(va, one) != va) r.fail("unit law fails on (" + to_string(a) + ")");
    }

  for (const auto& g1 : grades)
    for (const auto& g2 : grades) {
      if (g1.empty() || g2.empty()) continue;
      if (std::popcount(g1.mask() | g2.mask()) > max_union) continue;
      const bool overlap = !g1.disjoint_from(g2);
      const int sign = sign_of_parity(static_cast<long>(g1.degree()) * g2.degree());
      for (const auto& a : bases[g1])
        for (const auto& b : bases[g2]) {
          ++r.checked;
          const AltVector ab = cup(a, b);
          if (overlap) {
            if (!ab.is_zero()) r.fail("overlapping grades give nonzero product (" + to_string(a) + ")*(" + to_string(b) + ")");
            continue;
          }
          AltVector ba = cup(b, a);
          ba *= sign;
          if (ab != ba) r.fail("graded commutativity fails for (" + to_string(a) + "), (" + to_string(b) + ")");
        }
    }

  for (const auto& g1 : grades)
    for (const auto& g2 : grades)
      for (const auto& g3 : grades) {
        if (g1.empty() || g2.empty() || g3.empty()) continue;
        if (!g1.disjoint_from(g2) || !g1.disjoint_from(g3) || !g2.disjoint_from(g3)) continue;
        if (std::popcount(g1.mask() | g2.mask() | g3.mask()) > max_union) continue;
        for (const auto& a : bases[g1])
          for (const auto& b : bases[g2])
            for (const auto& c : bases[g3]) {
              ++r.checked;
              const AltVector va = AltVector::basis(a), vb = AltVector::basis(b), vc = AltVector::basis(c);
              if (cup(cup(va, vb), vc) != cup(va, cup(vb, vc)))
                r.fail("associativity fails for (" + to_string(a) + "), (" + to_string(b) + "), (" + to_string(c) + ")");
            }
      }
  return r;
}

SuiteResult verify_cup_oracle(int n, int max_union) {
  SuiteResult r{"cup_oracle"};
  PairingOracle oracle;
  for (const auto& u : grades_upto(n, max_union)) {
    if (u.empty()) continue;
    const auto zs = alt_basis(u);
    for (const auto& [i1, i2] : splits(u, false)) {
      const auto b1 = alt_basis(i1), b2 = alt_basis(i2);
      std::map<std::pair<BlockPerm, BlockPerm>, AltVector> products;
      for (const auto& a : b1)
        for (const auto& b : b2) products.emplace(std::make_pair(a, b), cup(a, b));
      for (const auto& z : zs) {
        const auto coords = oracle.pushforward_coordinates(z, i1, i2);
        for (const auto& [ab, prod] : products) {
          ++r.checked;
          auto it = coords.find(ab);
          const Rational topo = it == coords.end() ? Rational(0) : it->second;
          const Rational comb = prod.coefficient(z);
          if (topo != comb)
            r.fail("alpha=(" + to_string(ab.first) + ") beta=(" + to_string(ab.second) + ") z=(" + to_string(z) +
                   ") cup=" + to_string(comb) + " pairing=" + to_string(topo));
        }
      }
    }
  }
  return r;
}

SuiteResult verify_join_lemma(int n, int max_union) {
  SuiteResult r{"join_lemma"};
  PairingOracle oracle;
  long restrictable = 0, other = 0;
  for (const auto& u : grades_upto(n, max_union)) {
    if (u.empty()) continue;
    const auto zs = alt_basis(u);
    for (const auto& [i1, i2] : splits(u, true)) {
      const auto& h1 = oracle.basis_for(i1);
      const auto& h2 = oracle.basis_for(i2);
      for (const auto& z : zs) {
        ++r.checked;
        const auto got = oracle.pushforward_coordinates(z, i1, i2);
        std::map<std::pair<BlockPerm, BlockPerm>, Rational> want;
        if (is_restrictable(z, i1, i2)) {
          ++restrictable;
          const int eps = rearrangement_sign(z, i1, i2);
          const AltVector left = h1.express(restrict(z, i1));
          const AltVector right = h2.express(restrict(z, i2));
          for (const auto& [a, ca] : left.terms())
            for (const auto& [b, cb] : right.terms()) want.emplace(std::make_pair(a, b), ca * cb * eps);
        } else {
          ++other;
        }
        if (got != want)
          r.fail("z=(" + to_string(z) + ") I1={" + i1.to_string() + "} I2={" + i2.to_string() + "}");
      }
    }
  }
  r.note = std::to_string(restrictable) + " restrictable, " + std::to_string(other) + " not";
  return r;
}

SuiteResult verify_weyl_equivariance(int n, int trials, std::uint64_t seed) {
  SuiteResult r{"weyl_equivariance"};
  if (trials <= 0) {
    r.skipped = true;
    return r;
  }
  std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
  const auto grades = grades_upto(n, n + 1);
  std::vector<IndexSet> nonempty;
  for (const auto& g : grades)
    if (!g.empty()) nonempty.push_back(g);
  auto random_vector = [&](const IndexSet& g) {
    const auto basis = alt_basis(g);
    AltVector v(g);
    const std::size_t terms = 1 + pick(std::min<std::size_t>(3, basis.size()), rng);
    for (std::size_t t = 0; t < terms; ++t)
      v.add(basis[pick(basis.size(), rng)], Rational(static_cast<long>(pick(5, rng)) - 2));
    return v;
  };
  long relabel_not_multiplicative = 0;
  for (int t = 0; t < trials; ++t) {
    const IndexSet g1 = nonempty[pick(nonempty.size(), rng)];
    std::vector<IndexSet> partners;
    for (const auto& g : grades)
      if (g.disjoint_from(g1)) partners.push_back(g);
    const IndexSet g2 = partners[pick(partners.size(), rng)];
    const GradedClass u = GradedClass::of(n, random_vector(g1)), v = GradedClass::of(n, random_vector(g2));
    std::vector<Label> w(n + 1);
    std::iota(w.begin(), w.end(), 1);
    const std::size_t i = pick(static_cast<std::size_t>(n), rng);
    std::swap(w[i], w[i + 1]);
    const std::string where = "transposition (" + std::to_string(i + 1) + " " + std::to_string(i + 2) + ") on grades {" +
                              g1.to_string() + "}, {" + g2.to_string() + "}";

    ++r.checked;
    if (weyl_act_dual(w, ring_multiply(u, v)) != ring_multiply(weyl_act_dual(w, u), weyl_act_dual(w, v)))
      r.fail("dual action not multiplicative: " + where);

    // Relabeling is a module map: it commutes with reduction.
    const BlockPerm x = random_perm(g1, rng);
    ++r.checked;
    if (weyl_act(w, reduce(x)) != reduce(relabel(x, w))) r.fail("relabeling does not commute with reduce at (" + to_string(x) + ")");

    // The two actions are adjoint: ⟨w·γ, w·c⟩ = ⟨γ, c⟩.
    const AltVector gamma = u.component(g1);
    const AltVector c = reduce(x);
    const AltVector wg = weyl_act_dual(w, gamma), wc = weyl_act(w, c);
    Rational before = 0, after = 0;
    for (const auto& [a, q] : gamma.terms()) before += q * c.coefficient(a);
    for (const auto& [a, q] : wg.terms()) after += q * wc.coefficient(a);
    ++r.checked;
    if (before != after) r.fail("pairing not invariant: " + where);

    if (weyl_act(w, ring_multiply(u, v)) != ring_multiply(weyl_act(w, u), weyl_act(w, v))) ++relabel_not_multiplicative;
  }
  r.note = "relabeling action failed multiplicativity in " + std::to_string(relabel_not_multiplicative) + "/" +
           std::to_string(trials) + " trials (expected; the dual action is the ring automorphism)";
  return r;
}

SuiteResult monitor_report(const CoefficientMonitor& monitor) {
  SuiteResult r{"coefficient_monitor"};
  r.checked = monitor.observed;
  for (const auto& [value, where] : monitor.unusual) r.witnesses.push_back(to_string(value) + " at " + where);
  r.note = monitor.unusual.empty() ? "every nonzero coefficient is +1 or -1"
                                   : std::to_string(monitor.unusual.size()) + " coefficient values outside {-1, 0, 1}";
  return r;
}

std::vector<SuiteResult> run_verify(const VerifyOptions& opts) {
  const int n = opts.n;
  const int span = std::min(6, n + 1 - (n + 1) % 2);
  CoefficientMonitor monitor;
  std::vector<SuiteResult> out;
  out.push_back(verify_betti(std::min(n, 4), opts.cache));
  out.push_back(verify_coefficient_methods(span, opts.trials > 0 ? 8 : 0, opts.trials, opts.seed, &monitor));
  out.push_back(verify_homology_coefficients(span, &monitor));
  out.push_back(verify_rewriting(span, opts.trials > 0 ? 8 : 0, opts.trials, span, opts.seed));
  out.push_back(verify_ring_axioms(n, span));
  out.push_back(verify_cup_oracle(n, span));
  out.push_back(verify_join_lemma(n, span));
  out.push_back(verify_weyl_equivariance(n, opts.trials, opts.seed));
  out.push_back(monitor_report(monitor));
  return out;
}

Json to_json(const SuiteResult& r) {
  return {{"name", r.name},       {"passed", r.passed},       {"skipped", r.skipped},
          {"checked", r.checked}, {"witnesses", r.witnesses}, {"note", r.note}};
}

}  // namespace permring
