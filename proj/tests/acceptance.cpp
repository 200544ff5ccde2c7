// Acceptance gate: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Each body pushes a note per violated condition; notes are
// printed under the verdict line. Runtime budgets are part of the criteria.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <zps/gabidulin.hpp>
#include <zps/gamma.hpp>
#include <zps/matrix.hpp>
#include <zps/rank_code.hpp>
#include <zps/ring.hpp>
#include <zps/rng.hpp>

#include "test_util.hpp"

namespace {

using namespace zps;
using Notes = std::vector<std::string>;

void expect(Notes& notes, bool ok, const std::string& msg) {
  if (!ok) notes.push_back(msg);
}

std::vector<RingSpec> desk_rings() {
  return {make_ring(2, 1), make_ring(2, 2), make_ring(2, 3),
          make_ring(3, 1), make_ring(3, 2), make_ring(3, 3)};
}

std::string ring_name(const RingSpec& ring) {
  return "Z_" + std::to_string(ring.modulus);
}

// ---- criterion 1: canonical form reconstruction and invariance ----

void criterion_canonical(Notes& notes) {
  Rng rng(1001);
  for (const RingSpec& ring : desk_rings()) {
    for (int t = 0; t < 1000; ++t) {
      std::uint32_t m = 1 + std::uint32_t(rng.below(4));
      std::uint32_t n = 1 + std::uint32_t(rng.below(4));
      MatZ a = random_matrix(ring, m, n, rng);
      CanonicalForm cf = canonical_form(a);
      if (cf.P * cf.diagonal() * cf.Q != a) {
        expect(notes, false, "reconstruction failed over " + ring_name(ring));
        return;
      }
      if (cf.P * cf.P_inv != MatZ::identity(ring, m) ||
          cf.Q * cf.Q_inv != MatZ::identity(ring, n)) {
        expect(notes, false, "factor not invertible over " + ring_name(ring));
        return;
      }
      MatZ u = random_invertible(ring, m, rng);
      MatZ v = random_invertible(ring, n, rng);
      CanonicalForm cf2 = canonical_form(u * a * v);
      if (cf2.r != cf.r || cf2.ks != cf.ks) {
        expect(notes, false, "(r, ks) not equivalence-invariant over " + ring_name(ring));
        return;
      }
    }
  }
}

// ---- criterion 2: inner rank vs the definitional oracle ----

void criterion_oracle(Notes& notes) {
  const RingSpec z4 = make_ring(2, 2);
  const RingSpec z9 = make_ring(3, 2);
  std::uint64_t mismatches = 0;
  for (std::uint64_t code = 0; code < 256; ++code) {
    MatZ a(z4, 2, 2);
    std::uint64_t rest = code;
    for (std::uint32_t i = 0; i < 2; ++i)
      for (std::uint32_t j = 0; j < 2; ++j) {
        a.at(i, j) = rest % 4;
        rest /= 4;
      }
    if (inner_rank(a) != inner_rank_oracle(a)) ++mismatches;
  }
  expect(notes, mismatches == 0,
         std::to_string(mismatches) + " mismatches on the exhaustive 2x2 sweep over Z_4");

  for (const RingSpec& ring : {z4, z9}) {
    Rng rng(1002 + ring.modulus);
    std::uint64_t bad = 0;
    for (int t = 0; t < 500; ++t) {
      MatZ a = random_matrix(ring, 2, 3, rng);
      if (inner_rank(a) != inner_rank_oracle(a)) ++bad;
    }
    expect(notes, bad == 0,
           std::to_string(bad) + " mismatches on sampled 2x3 over " + ring_name(ring));
  }
}

// ---- criterion 3: evaluation base codes ----

void criterion_base_codes(Notes& notes) {
  const std::vector<std::array<std::uint32_t, 4>> params = {
      {2, 2, 2, 2}, {2, 2, 3, 2}, {2, 3, 3, 2}, {2, 3, 3, 3}, {3, 2, 2, 2}};
  for (auto [p, m, n, d] : params) {
    std::string tag = "(" + std::to_string(p) + "," + std::to_string(m) + "," +
                      std::to_string(n) + "," + std::to_string(d) + ")";
    RankCode code = gabidulin_code(p, m, n, d);
    std::uint64_t want = checked_pow(p, n * (m - d + 1), std::uint64_t(1) << 62);
    expect(notes, code.words.size() == want, "cardinality off at " + tag);
    expect(notes, test::pairwise_min_distance(code.words) == d,
           "exhaustive minimum distance != d at " + tag);
    expect(notes, is_linear_code(code), "base code not linear at " + tag);
  }
}

// ---- criterion 4: lifted codes (cardinality, distance, linearity, MDS) ----

void criterion_lifted_codes(Notes& notes) {
  const std::vector<std::array<std::uint32_t, 5>> params = {
      {2, 2, 2, 2, 2}, {2, 2, 2, 3, 2}, {2, 3, 2, 2, 2}, {3, 2, 2, 2, 2}};
  bool any_nonlinear = false;
  for (auto [p, s, m, n, d] : params) {
    std::string tag = "(" + std::to_string(p) + "," + std::to_string(s) + "," +
                      std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(d) + ")";
    RankCode lifted = lift_mrd(gabidulin_code(p, m, n, d), s);
    std::uint64_t want = checked_pow(p, s * n * (m - d + 1), std::uint64_t(1) << 62);
    expect(notes, lifted.words.size() == want, "cardinality off at " + tag);
    expect(notes, test::pairwise_min_distance(lifted.words) >= d,
           "exhaustive minimum distance below d at " + tag);
    if (!is_linear_code(lifted)) {
      any_nonlinear = true;
      expect(notes, false, "linearity fails at " + tag);
    }
    MdsReport mds = hamming_mds_check(lifted);
    expect(notes, mds.log_exact && mds.is_mds, "row-view MDS check failed at " + tag);
  }
  if (any_nonlinear) {
    notes.push_back(
        "explanation: the lift composes words digit by digit, and the sum of two words "
        "with overlapping low digits produces a carry into the next digit (entrywise AND "
        "for p=2). That carry has rank 1, and a code with minimum distance >= 2 contains "
        "no rank-1 word, so no choice of base makes the lifted set closed under addition "
        "(verified exhaustively for every 2-dimensional binary base). The lifted sets "
        "still attain the size and distance bounds and pass the row-view MDS check; only "
        "the linearity condition is unattainable for s >= 2.");
  }
}

// ---- criterion 5: certificate invariants at desk scale ----

void criterion_certificates(Notes& notes) {
  GammaSpec square = make_gamma_spec(make_ring(2, 2), 2, 2, 2);
  const std::array<std::pair<const char*, InvariantCertificate>, 4> certs = {{
      {"alpha", alpha_certificate(square)},
      {"omega", omega_certificate(square)},
      {"chi", chi_certificate(square)},
      {"chi_complement", complement_chi_certificate(square)},
  }};
  for (const auto& [name, cert] : certs) {
    expect(notes, cert.claimed_value == 16,
           std::string(name) + " claims " + std::to_string(cert.claimed_value) + ", want 16");
    expect(notes, cert.checks_passed, std::string(name) + " partition verification failed");
    expect(notes,
           cert.partition_base.size() * cert.partition_offsets.size() == vertex_count(square),
           std::string(name) + " partition does not cover the vertex set");
  }

  GammaSpec wide = make_gamma_spec(make_ring(2, 2), 2, 3, 2);
  InvariantCertificate wa = alpha_certificate(wide);
  InvariantCertificate ww = omega_certificate(wide);
  expect(notes, wa.claimed_value == 64 && wa.checks_passed, "alpha at 2x3 over Z_4 is not 64");
  expect(notes, ww.claimed_value == 64 && ww.checks_passed, "omega at 2x3 over Z_4 is not 64");
}

// ---- criterion 6: exhaustive solver cross-check ----

void criterion_brute(Notes& notes) {
  GammaSpec spec = make_gamma_spec(make_ring(2, 1), 2, 2, 2);
  SmallGraph g = to_small_graph(build_explicit_graph(spec));
  auto [alpha, omega] = brute_alpha_omega(g);
  expect(notes, alpha == 4 && omega == 4,
         "brute force returned (" + std::to_string(alpha) + "," + std::to_string(omega) + ")");
  expect(notes, alpha_certificate(spec).claimed_value == alpha,
         "alpha certificate disagrees with brute force");
  expect(notes, omega_certificate(spec).claimed_value == omega,
         "omega certificate disagrees with brute force");
}

// ---- criterion 7: connectivity, translations, explicit paths ----

void criterion_graph_motion(Notes& notes) {
  GammaSpec small = make_gamma_spec(make_ring(2, 1), 2, 2, 2);
  GammaSpec mid = make_gamma_spec(make_ring(2, 2), 2, 2, 2);
  expect(notes, is_connected(small), "16-vertex graph not connected");
  expect(notes, is_connected(mid), "256-vertex graph not connected");

  for (std::uint64_t idx = 0; idx < vertex_count(small); ++idx) {
    if (!verify_translation_automorphism(small, decode_vertex(idx, small), 0, 1)) {
      expect(notes, false, "translation " + std::to_string(idx) + " fails on 16 vertices");
      break;
    }
  }
  for (std::uint64_t idx = 0; idx < vertex_count(mid); ++idx) {
    if (!verify_translation_automorphism(mid, decode_vertex(idx, mid), 0, 1)) {
      expect(notes, false, "translation " + std::to_string(idx) + " fails on 256 vertices");
      break;
    }
  }

  GammaSpec big = make_gamma_spec(make_ring(2, 3), 3, 4, 2);
  Rng rng(1007);
  for (int t = 0; t < 200; ++t) {
    MatZ a = random_matrix(big.ring, 3, 4, rng);
    MatZ b = random_matrix(big.ring, 3, 4, rng);
    std::vector<MatZ> path = path_between(a, b, big);
    bool ok = !path.empty() && path.front() == a && path.back() == b;
    for (std::size_t i = 0; ok && i + 1 < path.size(); ++i)
      ok = inner_rank(path[i + 1] - path[i]) < big.d && path[i + 1] != path[i];
    if (a != b) ok = ok && path.size() <= 1 + inner_rank(b - a);
    if (!ok) {
      expect(notes, false, "invalid path at sample " + std::to_string(t));
      return;
    }
  }
}

// ---- criterion 8: clique classification round trips and rejections ----

void criterion_cliques(Notes& notes) {
  const std::vector<std::array<std::uint32_t, 5>> params = {
      {2, 1, 2, 2, 2}, {2, 2, 2, 2, 2}, {3, 1, 2, 2, 2}};
  for (auto [p, s, m, n, d] : params) {
    GammaSpec spec = make_gamma_spec(make_ring(p, s), m, n, d);
    std::string tag = "Z_" + std::to_string(spec.ring.modulus);
    Rng rng(1008 + p + s);
    for (int t = 0; t < 100; ++t) {
      for (CliqueOrientation o : {CliqueOrientation::row, CliqueOrientation::column}) {
        CliqueForm seeded{o, random_invertible(spec.ring, o == CliqueOrientation::row ? m : n, rng),
                          random_matrix(spec.ring, m, n, rng)};
        std::vector<MatZ> words = clique_from_form(seeded, spec);
        CliqueForm found = classify_max_clique(words, spec);
        std::vector<MatZ> rebuilt = clique_from_form(found, spec);
        std::set<std::vector<std::uint64_t>> lhs, rhs;
        for (const MatZ& w : words) lhs.emplace(w.data(), w.data() + w.size());
        for (const MatZ& w : rebuilt) rhs.emplace(w.data(), w.data() + w.size());
        if (lhs != rhs) {
          expect(notes, false, "reconstruction mismatch over " + tag);
          return;
        }
      }
    }

    std::vector<MatZ> words = canonical_max_clique(spec);
    std::vector<MatZ> dup = words;
    dup[1] = dup[0];
    expect(notes,
           test::thrown_kind([&] { classify_max_clique(dup, spec); }) == errc::duplicate_word,
           "duplicate word not rejected over " + tag);
    std::vector<MatZ> short_set(words.begin(), words.end() - 1);
    expect(notes,
           test::thrown_kind([&] { classify_max_clique(short_set, spec); }) == errc::not_maximum,
           "wrong cardinality not rejected over " + tag);
    std::vector<MatZ> far = words;
    far[1] = MatZ::identity(spec.ring, m);
    if (std::find(words.begin(), words.end(), far[1]) == words.end())
      expect(notes,
             test::thrown_kind([&] { classify_max_clique(far, spec); }) == errc::not_a_clique,
             "non-clique not rejected over " + tag);
  }
}

// ---- criterion 9: algebraic property suite ----

void criterion_properties(Notes& notes) {
  std::vector<RingSpec> rings = desk_rings();
  Rng rng(1009);
  auto pick_ring = [&]() -> const RingSpec& { return rings[rng.below(rings.size())]; };

  // scalar layer: decomposition, digits, unit stability
  for (int t = 0; t < 500; ++t) {
    const RingSpec& ring = pick_ring();
    std::uint64_t x = 1 + rng.below(ring.modulus - 1);
    UnitDecomposition dec = unit_decompose(residue(x, ring));
    if (mul_mod(dec.unit.value, checked_pow(ring.p, dec.t, ring.modulus), ring) != x) {
      expect(notes, false, "unit decomposition does not recompose");
      return;
    }
    std::vector<std::uint64_t> digits = padic_digits(residue(x, ring));
    if (digits_compose(digits, ring).value != x) {
      expect(notes, false, "digit bijection broken");
      return;
    }
    std::uint32_t trailing = 0;
    while (trailing < digits.size() && digits[trailing] == 0) ++trailing;
    if (trailing != dec.t) {
      expect(notes, false, "valuation disagrees with trailing zero digits");
      return;
    }
    if (ring.s >= 2) {
      std::uint64_t unit = 1 + rng.below(ring.modulus - 1);
      while (!is_unit_value(unit, ring)) unit = 1 + rng.below(ring.modulus - 1);
      std::uint64_t rad = ring.p * rng.below(ring.modulus / ring.p);
      if (!is_unit_value(add_mod(unit, rad, ring), ring) ||
          !is_unit_value(sub_mod(unit, rad, ring), ring)) {
        expect(notes, false, "unit plus radical left the unit group");
        return;
      }
    }
  }

  // rank laws
  for (int t = 0; t < 500; ++t) {
    const RingSpec& ring = pick_ring();
    std::uint32_t m = 1 + std::uint32_t(rng.below(3));
    std::uint32_t n = 1 + std::uint32_t(rng.below(3));
    std::uint32_t k = 1 + std::uint32_t(rng.below(3));
    MatZ a = random_matrix(ring, m, n, rng);
    MatZ b = random_matrix(ring, m, n, rng);
    MatZ c = random_matrix(ring, n, k, rng);
    bool ok = inner_rank(a + b) <= inner_rank(a) + inner_rank(b);
    ok = ok && inner_rank(a * c) <= std::min(inner_rank(a), inner_rank(c));
    ok = ok && inner_rank(block_diag(a, b)) == inner_rank(a) + inner_rank(b);
    ok = ok && inner_rank(transpose(a)) == inner_rank(a);
    ok = ok && mccoy_rank(a) <= inner_rank(a);
    if (ring.s == 1) ok = ok && mccoy_rank(a) == inner_rank(a);
    ok = ok && mccoy_rank(a) == test::gauss_rank_mod_p(a);
    MatZ u = random_invertible(ring, m, rng);
    MatZ v = random_invertible(ring, n, rng);
    ok = ok && inner_rank(u * a * v) == inner_rank(a) && mccoy_rank(u * a * v) == mccoy_rank(a);
    if (!ok) {
      expect(notes, false, "a rank law failed at sample " + std::to_string(t));
      return;
    }
  }

  // McCoy rank is blind to radical perturbations
  for (int t = 0; t < 500; ++t) {
    const RingSpec& ring = rings[1 + rng.below(2) * 3];  // Z_4 or Z_9
    MatZ a = random_matrix(ring, 2, 3, rng);
    MatZ r(ring, 2, 3);
    for (std::uint32_t i = 0; i < 2; ++i)
      for (std::uint32_t j = 0; j < 3; ++j) r.at(i, j) = ring.p * rng.below(ring.modulus / ring.p);
    if (mccoy_rank(a + r) != mccoy_rank(a) || mccoy_rank(a - r) != mccoy_rank(a)) {
      expect(notes, false, "radical perturbation changed the McCoy rank");
      return;
    }
  }

  // reduction homomorphism
  for (int t = 0; t < 500; ++t) {
    const RingSpec& ring = pick_ring();
    MatZ x = random_matrix(ring, 2, 2, rng);
    MatZ y = random_matrix(ring, 2, 2, rng);
    MatZ q = random_matrix(ring, 2, 2, rng);
    bool ok = reduce_mod_p(x + y) == reduce_mod_p(x) + reduce_mod_p(y);
    ok = ok && reduce_mod_p(x * q) == reduce_mod_p(x) * reduce_mod_p(q);
    ok = ok && reduce_mod_p(transpose(x)) == transpose(reduce_mod_p(x));
    if (!ok) {
      expect(notes, false, "mod-p reduction is not a homomorphism");
      return;
    }
  }

  // rank distance is a translation-invariant metric
  for (int t = 0; t < 500; ++t) {
    const RingSpec& ring = pick_ring();
    MatZ a = random_matrix(ring, 2, 3, rng);
    MatZ b = random_matrix(ring, 2, 3, rng);
    MatZ c = random_matrix(ring, 2, 3, rng);
    bool ok = rank_distance(a, b) == rank_distance(b, a);
    ok = ok && (rank_distance(a, b) == 0) == (a == b);
    ok = ok && rank_distance(a, c) <= rank_distance(a, b) + rank_distance(b, c);
    ok = ok && rank_distance(a + c, b + c) == rank_distance(a, b);
    if (!ok) {
      expect(notes, false, "rank distance metric law failed");
      return;
    }
  }

  // entry lifting preserves rank structure
  for (int t = 0; t < 500; ++t) {
    const RingSpec& src = rings[rng.below(2) ? 0 : 3];  // a field
    const RingSpec& dst = src.p == 2 ? rings[1] : rings[4];
    MatZ a = random_matrix(src, 2, 3, rng);
    if (mccoy_rank(lift(a, dst)) != mccoy_rank(a) ||
        inner_rank(lift_times_p(a, dst)) != inner_rank(a)) {
      expect(notes, false, "lifting changed a rank it must preserve");
      return;
    }
  }

  // translating a maximum clique keeps it a clique
  GammaSpec spec = make_gamma_spec(make_ring(2, 1), 2, 2, 2);
  std::vector<MatZ> clique = canonical_max_clique(spec);
  for (int t = 0; t < 500; ++t) {
    MatZ off = random_matrix(spec.ring, 2, 2, rng);
    for (std::size_t i = 0; i < clique.size(); ++i)
      for (std::size_t j = i + 1; j < clique.size(); ++j)
        if (!adjacent(clique[i] + off, clique[j] + off, spec)) {
          expect(notes, false, "translated clique lost an edge");
          return;
        }
  }
}

struct Criterion {
  int number;
  std::string label;
  double budget_seconds;
  std::function<void(Notes&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "canonical form reconstruction and invariance", 10, criterion_canonical},
      {2, "inner rank matches the definitional oracle", 60, criterion_oracle},
      {3, "evaluation base codes are MRD and linear", 60, criterion_base_codes},
      {4, "lifted codes: size, distance, linearity, MDS", 300, criterion_lifted_codes},
      {5, "certified graph invariants at desk scale", 120, criterion_certificates},
      {6, "exhaustive solver matches certificates", 1, criterion_brute},
      {7, "connectivity, translations, explicit paths", 60, criterion_graph_motion},
      {8, "maximum clique classification round trips", 120, criterion_cliques},
      {9, "algebraic property suite", 60, criterion_properties},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    Notes notes;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(notes);
    } catch (const error& e) {
      notes.push_back(std::string("unexpected error: ") + e.what());
    } catch (const std::exception& e) {
      notes.push_back(std::string("unexpected exception: ") + e.what());
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > c.budget_seconds)
      notes.push_back("runtime " + std::to_string(elapsed) + "s exceeds the budget of " +
                      std::to_string(c.budget_seconds) + "s");
    const bool pass = notes.empty();
    failures += pass ? 0 : 1;
    std::ostringstream line;
    line << "criterion " << c.number << " (" << c.label << "): " << (pass ? "PASS" : "FAIL");
    std::cout << line.str() << '\n';
    for (const std::string& n : notes) std::cout << "  - " << n << '\n';
  }
  if (failures != 0)
    std::cout << failures << " of " << criteria.size() << " criteria failed" << '\n';
  return failures == 0 ? 0 : 1;
}
