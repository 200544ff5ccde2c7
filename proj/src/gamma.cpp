#include "zps/gamma.hpp"

#include <algorithm>
#include <string>

#include "zps/gabidulin.hpp"
#include "zps/rng.hpp"

namespace zps {

namespace {

void check_vertex(const MatZ& a, const GammaSpec& spec) {
  if (a.ring() != spec.ring) fail(errc::ring_mismatch, "vertex over a different ring");
  if (a.rows() != spec.m || a.cols() != spec.n)
    fail(errc::dimension_mismatch, "vertex with wrong shape");
}

std::uint64_t pair_count(std::uint64_t k) { return k * (k - 1) / 2; }

// Every unordered pair at inner-rank distance in [1, d-1].
bool all_pairs_close(const std::vector<MatZ>& ws, std::uint32_t d, const Limits& limits) {
  if (pair_count(ws.size()) > limits.max_pair_checks)
    fail(errc::too_large, "pairwise clique check exceeds the pair guard");
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = i + 1; j < ws.size(); ++j) {
      std::uint32_t rho = rank_distance(ws[i], ws[j]);
      if (rho == 0 || rho >= d) return false;
    }
  return true;
}

// Every unordered pair at inner-rank distance >= d.
bool all_pairs_far(const std::vector<MatZ>& ws, std::uint32_t d, const Limits& limits) {
  if (pair_count(ws.size()) > limits.max_pair_checks)
    fail(errc::too_large, "pairwise independence check exceeds the pair guard");
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = i + 1; j < ws.size(); ++j)
      if (rank_distance(ws[i], ws[j]) < d) return false;
  return true;
}

}  // namespace

GammaSpec make_gamma_spec(const RingSpec& ring, std::uint32_t m, std::uint32_t n, std::uint32_t d) {
  if (m > n) fail(errc::bad_parameters, "graph convention requires m <= n");
  if (!(2 <= d && d <= std::min(m, n)))
    fail(errc::bad_parameters, "graph requires 2 <= d <= min(m, n)");
  return GammaSpec{ring, m, n, d};
}

std::uint64_t vertex_count(const GammaSpec& spec) {
  return checked_pow(spec.ring.modulus, spec.m * spec.n, std::uint64_t(1) << 62);
}

std::uint64_t encode_vertex(const MatZ& a) {
  const std::uint64_t mod = a.ring().modulus;
  unsigned __int128 code = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    code = code * mod + a.data()[i];
    if (code > (static_cast<unsigned __int128>(1) << 62))
      fail(errc::overflow, "vertex code exceeds supported range");
  }
  return static_cast<std::uint64_t>(code);
}

MatZ decode_vertex(std::uint64_t index, const GammaSpec& spec) {
  MatZ a(spec.ring, spec.m, spec.n);
  const std::uint64_t mod = spec.ring.modulus;
  for (std::size_t i = a.size(); i-- > 0;) {
    a.data()[i] = index % mod;
    index /= mod;
  }
  if (index != 0) fail(errc::bad_parameters, "vertex index out of range");
  return a;
}

bool adjacent(const MatZ& a, const MatZ& b, const GammaSpec& spec) {
  check_vertex(a, spec);
  check_vertex(b, spec);
  if (a == b) return false;
  return inner_rank(sub(a, b)) < spec.d;
}

bool ExplicitGraph::adjacent_idx(std::uint64_t u, std::uint64_t v) const {
  if (u == v) return false;
  MatZ diff = sub(decode_vertex(u, spec), decode_vertex(v, spec));
  return low_rank[encode_vertex(diff)] != 0;
}

std::vector<std::uint64_t> ExplicitGraph::neighbors(std::uint64_t u) const {
  MatZ a = decode_vertex(u, spec);
  std::vector<std::uint64_t> out;
  out.reserve(deltas.size());
  for (const MatZ& delta : deltas) out.push_back(encode_vertex(add(a, delta)));
  std::sort(out.begin(), out.end());
  return out;
}

ExplicitGraph build_explicit_graph(const GammaSpec& spec, const Limits& limits) {
  const std::uint64_t n = vertex_count(spec);
  if (n > limits.max_graph_vertices)
    fail(errc::too_large, std::to_string(n) + " vertices exceed the graph guard");
  ExplicitGraph g;
  g.spec = spec;
  g.n_vertices = n;
  g.low_rank.assign(n, 0);
  g.low_rank[0] = 1;
  for (std::uint64_t idx = 1; idx < n; ++idx) {
    MatZ x = decode_vertex(idx, spec);
    if (inner_rank(x) < spec.d) {
      g.low_rank[idx] = 1;
      g.deltas.push_back(std::move(x));
    }
  }
  return g;
}

void write_edge_list(const ExplicitGraph& graph, std::ostream& out) {
  for (std::uint64_t u = 0; u < graph.n_vertices; ++u) {
    for (std::uint64_t v : graph.neighbors(u))
      if (v > u) out << u << ' ' << v << '\n';
  }
}

bool is_connected(const GammaSpec& spec, const Limits& limits) {
  ExplicitGraph g = build_explicit_graph(spec, limits);
  if (g.n_vertices == 0) return true;
  std::vector<char> seen(g.n_vertices, 0);
  std::vector<std::uint64_t> stack{0};
  seen[0] = 1;
  std::uint64_t visited = 1;
  while (!stack.empty()) {
    std::uint64_t u = stack.back();
    stack.pop_back();
    for (std::uint64_t v : g.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++visited;
        stack.push_back(v);
      }
    }
  }
  return visited == g.n_vertices;
}

std::vector<MatZ> path_between(const MatZ& a, const MatZ& b, const GammaSpec& spec) {
  check_vertex(a, spec);
  check_vertex(b, spec);
  std::vector<MatZ> path{a};
  if (a == b) return path;

  CanonicalForm cf = canonical_form(sub(b, a));
  const std::uint32_t rho = cf.inner_rank();
  std::vector<std::uint64_t> diag_entries;
  for (std::uint32_t i = 0; i < cf.r; ++i) diag_entries.push_back(1);
  for (std::uint32_t k : cf.ks) {
    std::uint64_t v = 1;
    for (std::uint32_t i = 0; i < k; ++i) v *= spec.ring.p;
    diag_entries.push_back(v);
  }

  const std::uint32_t step = spec.d - 1;
  for (std::uint32_t hi = step; ; hi += step) {
    if (hi > rho) hi = rho;
    MatZ partial(spec.ring, spec.m, spec.n);
    for (std::uint32_t i = 0; i < hi; ++i) partial.at(i, i) = diag_entries[i];
    path.push_back(add(a, mul(mul(cf.P, partial), cf.Q)));
    if (hi == rho) break;
  }
  if (path.back() != b) fail(errc::internal, "path endpoint mismatch");
  return path;
}

bool preserves_adjacency(const GammaSpec& spec, const std::function<MatZ(const MatZ&)>& map,
                         std::uint64_t samples, std::uint64_t seed, const Limits& limits) {
  auto pair_ok = [&](const MatZ& x, const MatZ& y) {
    return adjacent(x, y, spec) == adjacent(map(x), map(y), spec);
  };
  if (samples == 0) {
    const std::uint64_t n = vertex_count(spec);
    if (n > limits.max_graph_vertices)
      fail(errc::too_large, "exhaustive pair check needs explicit scale");
    if (pair_count(n) > limits.max_pair_checks)
      fail(errc::too_large, "exhaustive pair check exceeds the pair guard");
    for (std::uint64_t u = 0; u < n; ++u) {
      MatZ x = decode_vertex(u, spec);
      for (std::uint64_t v = u + 1; v < n; ++v) {
        if (!pair_ok(x, decode_vertex(v, spec))) return false;
      }
    }
    return true;
  }
  Rng rng(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    MatZ x = random_matrix(spec.ring, spec.m, spec.n, rng);
    MatZ y = random_matrix(spec.ring, spec.m, spec.n, rng);
    if (!pair_ok(x, y)) return false;
  }
  return true;
}

bool verify_translation_automorphism(const GammaSpec& spec, const MatZ& a, std::uint64_t samples,
                                     std::uint64_t seed, const Limits& limits) {
  check_vertex(a, spec);
  return preserves_adjacency(
      spec, [&](const MatZ& x) { return add(x, a); }, samples, seed, limits);
}

std::vector<MatZ> canonical_max_clique(const GammaSpec& spec, const Limits& limits) {
  const std::uint32_t free_rows = spec.d - 1;
  const std::uint64_t count =
      checked_pow(spec.ring.modulus, free_rows * spec.n, std::uint64_t(1) << 62);
  if (count > limits.max_code_words)
    fail(errc::too_large, "clique would have " + std::to_string(count) + " members");
  std::vector<MatZ> out;
  out.reserve(count);
  const std::uint64_t mod = spec.ring.modulus;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    MatZ w(spec.ring, spec.m, spec.n);
    std::uint64_t t = idx;
    for (std::size_t pos = std::size_t(free_rows) * spec.n; pos-- > 0;) {
      w.data()[pos] = t % mod;
      t /= mod;
    }
    out.push_back(std::move(w));
  }
  return out;  // ascending lexicographic by construction
}

RankCode max_independent_code(const GammaSpec& spec, const Limits& limits) {
  RankCode base = gabidulin_code(spec.ring.p, spec.m, spec.n, spec.d, limits);
  return lift_mrd(base, spec.ring.s, limits);
}

const char* cert_kind_name(CertKind kind) noexcept {
  switch (kind) {
    case CertKind::alpha: return "alpha";
    case CertKind::omega: return "omega";
    case CertKind::chi: return "chi";
    case CertKind::chi_complement: return "chi_complement";
  }
  return "?";
}

namespace {

// Marks every block element in a vertex-indexed table; exact cover means no
// double hits and a full table.
bool check_exact_cover(const std::vector<MatZ>& base, const std::vector<MatZ>& offsets,
                       const GammaSpec& spec, const Limits& limits, std::string& detail) {
  const std::uint64_t n = vertex_count(spec);
  if (n > limits.max_graph_vertices) fail(errc::too_large, "cover check needs explicit scale");
  if (base.size() * offsets.size() != n) {
    detail = "block sizes multiply to " + std::to_string(base.size() * offsets.size()) +
             ", expected " + std::to_string(n);
    return false;
  }
  std::vector<char> mark(n, 0);
  for (const MatZ& off : offsets) {
    for (const MatZ& b : base) {
      std::uint64_t idx = encode_vertex(add(b, off));
      if (mark[idx]) {
        detail = "vertex " + std::to_string(idx) + " covered twice";
        return false;
      }
      mark[idx] = 1;
    }
  }
  detail = "all " + std::to_string(n) + " vertices covered exactly once";
  return true;
}

enum class BlockKind { clique, independent };

bool check_blocks(const std::vector<MatZ>& base, const std::vector<MatZ>& offsets,
                  const GammaSpec& spec, BlockKind kind, const Limits& limits) {
  const std::uint64_t per_block = pair_count(base.size());
  if (per_block * offsets.size() > limits.max_pair_checks)
    fail(errc::too_large, "per-block pair checks exceed the pair guard");
  Limits block_limits = limits;
  for (const MatZ& off : offsets) {
    std::vector<MatZ> block;
    block.reserve(base.size());
    for (const MatZ& b : base) block.push_back(add(b, off));
    bool ok = kind == BlockKind::clique ? all_pairs_close(block, spec.d, block_limits)
                                        : all_pairs_far(block, spec.d, block_limits);
    if (!ok) return false;
  }
  return true;
}

void log_check(InvariantCertificate& cert, const std::string& name, bool ok,
               const std::string& detail = "") {
  cert.check_log.push_back(name + ": " + (ok ? "ok" : "FAILED") +
                           (detail.empty() ? "" : " (" + detail + ")"));
  cert.checks_passed = cert.checks_passed && ok;
}

// Shared worker: the code blocks tile the graph into cliques (alpha side)
// and the clique blocks tile it into independent sets (omega side).
InvariantCertificate build_certificate(const GammaSpec& spec, CertKind kind, const Limits& limits) {
  const bool alpha_side = kind == CertKind::alpha || kind == CertKind::chi_complement;
  RankCode code = max_independent_code(spec, limits);
  std::vector<MatZ> clique = canonical_max_clique(spec, limits);

  InvariantCertificate cert;
  cert.kind = kind;
  cert.checks_passed = true;

  const std::uint32_t exp_alpha = spec.ring.s * spec.n * (spec.m - spec.d + 1);
  const std::uint64_t alpha_expected = checked_pow(spec.ring.p, exp_alpha, std::uint64_t(1) << 62);
  const std::uint32_t exp_omega = spec.ring.s * spec.n * (spec.d - 1);
  const std::uint64_t omega_expected = checked_pow(spec.ring.p, exp_omega, std::uint64_t(1) << 62);

  if (alpha_side) {
    cert.claimed_value = alpha_expected;
    cert.witness = code.words;
    cert.partition_base = clique;
    cert.partition_offsets = code.words;
    cert.partition_description =
        "translates of the canonical maximum clique by every witness codeword; each block is a "
        "verified clique, so at most one witness element fits per block";
    log_check(cert, "witness cardinality = " + std::to_string(alpha_expected),
              code.words.size() == alpha_expected);
    log_check(cert, "witness is an independent set (pairwise rank distance >= d)",
              all_pairs_far(code.words, spec.d, limits));
    std::string cover_detail;
    log_check(cert, "blocks cover every vertex exactly once",
              check_exact_cover(clique, code.words, spec, limits, cover_detail), cover_detail);
    log_check(cert, "every block is a clique",
              check_blocks(clique, code.words, spec, BlockKind::clique, limits));
  } else {
    cert.claimed_value = omega_expected;
    cert.witness = clique;
    cert.partition_base = code.words;
    cert.partition_offsets = clique;
    cert.partition_description =
        "translates of the maximum-distance code by every clique member; each block is a verified "
        "independent set, so the blocks form a proper coloring";
    log_check(cert, "witness cardinality = " + std::to_string(omega_expected),
              clique.size() == omega_expected);
    log_check(cert, "witness is a clique (pairwise rank distance in [1, d-1])",
              all_pairs_close(clique, spec.d, limits));
    std::string cover_detail;
    log_check(cert, "blocks cover every vertex exactly once",
              check_exact_cover(code.words, clique, spec, limits, cover_detail), cover_detail);
    log_check(cert, "every block is an independent set",
              check_blocks(code.words, clique, spec, BlockKind::independent, limits));
  }
  return cert;
}

}  // namespace

InvariantCertificate alpha_certificate(const GammaSpec& spec, const Limits& limits) {
  return build_certificate(spec, CertKind::alpha, limits);
}

InvariantCertificate omega_certificate(const GammaSpec& spec, const Limits& limits) {
  return build_certificate(spec, CertKind::omega, limits);
}

// A proper coloring with as many colors as a verified clique pins the
// chromatic number: clique <= chi <= colors.
InvariantCertificate chi_certificate(const GammaSpec& spec, const Limits& limits) {
  return build_certificate(spec, CertKind::chi, limits);
}

// On the complement the witness code is a clique and the clique translates
// are color classes, so the same tiling pins the complement's chromatic
// number at the independence number.
InvariantCertificate complement_chi_certificate(const GammaSpec& spec, const Limits& limits) {
  return build_certificate(spec, CertKind::chi_complement, limits);
}

SmallGraph SmallGraph::empty_graph(std::uint32_t n) {
  if (n == 0) fail(errc::bad_parameters, "graph needs at least one vertex");
  SmallGraph g;
  g.n = n;
  g.adj.assign(n, std::vector<std::uint64_t>((n + 63) / 64, 0));
  return g;
}

SmallGraph SmallGraph::complete(std::uint32_t n) {
  SmallGraph g = empty_graph(n);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

void SmallGraph::add_edge(std::uint32_t u, std::uint32_t v) {
  if (u == v || u >= n || v >= n) fail(errc::bad_parameters, "bad edge");
  adj[u][v >> 6] |= std::uint64_t(1) << (v & 63);
  adj[v][u >> 6] |= std::uint64_t(1) << (u & 63);
}

bool SmallGraph::has_edge(std::uint32_t u, std::uint32_t v) const {
  return (adj[u][v >> 6] >> (v & 63)) & 1;
}

SmallGraph to_small_graph(const ExplicitGraph& graph) {
  if (graph.n_vertices > 512) fail(errc::too_large, "dense conversion is capped at 512 vertices");
  SmallGraph g = SmallGraph::empty_graph(static_cast<std::uint32_t>(graph.n_vertices));
  std::vector<MatZ> verts;
  verts.reserve(graph.n_vertices);
  for (std::uint64_t u = 0; u < graph.n_vertices; ++u)
    verts.push_back(decode_vertex(u, graph.spec));
  for (std::uint32_t u = 0; u < g.n; ++u)
    for (std::uint32_t v = u + 1; v < g.n; ++v)
      if (graph.low_rank[encode_vertex(sub(verts[u], verts[v]))]) g.add_edge(u, v);
  return g;
}

SmallGraph complement(const SmallGraph& g) {
  SmallGraph out = SmallGraph::empty_graph(g.n);
  for (std::uint32_t u = 0; u < g.n; ++u)
    for (std::uint32_t v = u + 1; v < g.n; ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

namespace {

// Branch and bound maximum clique with a greedy-coloring bound.
struct CliqueSolver {
  const SmallGraph& g;
  std::uint32_t words;
  std::uint32_t best = 0;

  explicit CliqueSolver(const SmallGraph& graph)
      : g(graph), words(static_cast<std::uint32_t>(graph.adj[0].size())) {}

  static bool any(const std::vector<std::uint64_t>& bs) {
    for (std::uint64_t w : bs)
      if (w) return true;
    return false;
  }
  static void clear_bit(std::vector<std::uint64_t>& bs, std::uint32_t v) {
    bs[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
  }
  static std::uint32_t lowest(const std::vector<std::uint64_t>& bs) {
    for (std::uint32_t w = 0; w < bs.size(); ++w)
      if (bs[w]) return w * 64 + static_cast<std::uint32_t>(__builtin_ctzll(bs[w]));
    return ~0u;
  }

  void expand(std::uint32_t r_size, std::vector<std::uint64_t> cand) {
    if (!any(cand)) {
      best = std::max(best, r_size);
      return;
    }
    // Greedy coloring: same-color vertices are pairwise non-adjacent, so any
    // clique inside cand uses at most max-color vertices.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> order;  // (vertex, color)
    std::vector<std::uint64_t> uncolored = cand;
    std::uint32_t color = 0;
    while (any(uncolored)) {
      ++color;
      std::vector<std::uint64_t> q = uncolored;
      while (any(q)) {
        std::uint32_t v = lowest(q);
        clear_bit(q, v);
        clear_bit(uncolored, v);
        order.emplace_back(v, color);
        for (std::uint32_t w = 0; w < words; ++w) q[w] &= ~g.adj[v][w];
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      auto [v, c] = *it;
      if (r_size + c <= best) return;  // colors only shrink along the loop
      std::vector<std::uint64_t> next(words);
      for (std::uint32_t w = 0; w < words; ++w) next[w] = cand[w] & g.adj[v][w];
      expand(r_size + 1, std::move(next));
      clear_bit(cand, v);
    }
  }

  std::uint32_t solve() {
    std::vector<std::uint64_t> all(words, 0);
    for (std::uint32_t v = 0; v < g.n; ++v) all[v >> 6] |= std::uint64_t(1) << (v & 63);
    expand(0, std::move(all));
    return best;
  }
};

}  // namespace

std::uint32_t brute_omega(const SmallGraph& g) {
  if (g.n > 512) fail(errc::too_large, "exhaustive clique search is capped at 512 vertices");
  return CliqueSolver(g).solve();
}

std::uint32_t brute_alpha(const SmallGraph& g) {
  if (g.n > 64) fail(errc::too_large, "exhaustive independent-set search is capped at 64 vertices");
  return brute_omega(complement(g));
}

std::pair<std::uint32_t, std::uint32_t> brute_alpha_omega(const SmallGraph& g) {
  return {brute_alpha(g), brute_omega(g)};
}

const char* orientation_name(CliqueOrientation o) noexcept {
  return o == CliqueOrientation::row ? "row" : "column";
}

namespace {

// Column module of the translated words, accumulated word by word as
// P * diag(...) from the normal form; returns the final transform when the
// module is free of rank exactly d - 1.
std::optional<MatZ> row_transform(const std::vector<MatZ>& translated, const GammaSpec& spec) {
  const std::uint32_t m = translated.empty() ? 0 : translated[0].rows();
  std::optional<MatZ> span;  // m x rho, columns generate the module
  for (const MatZ& w : translated) {
    if (w.is_zero()) continue;
    MatZ stacked = w;
    if (span) {
      // [span | w]
      MatZ s = *span;
      MatZ joined(w.ring(), m, s.cols() + w.cols());
      for (std::uint32_t i = 0; i < m; ++i) {
        for (std::uint32_t j = 0; j < s.cols(); ++j) joined.at(i, j) = s(i, j);
        for (std::uint32_t j = 0; j < w.cols(); ++j) joined.at(i, s.cols() + j) = w(i, j);
      }
      stacked = std::move(joined);
    }
    CanonicalForm cf = canonical_form(stacked);
    const std::uint32_t rho = cf.inner_rank();
    if (rho == 0) continue;
    MatZ d = cf.diagonal();
    MatZ compressed(w.ring(), m, rho);
    for (std::uint32_t j = 0; j < rho; ++j)
      for (std::uint32_t i = 0; i < m; ++i)
        compressed.at(i, j) = mul_mod(cf.P(i, j), d(j, j), w.ring());
    span = std::move(compressed);
  }
  if (!span) return std::nullopt;
  CanonicalForm cf = canonical_form(*span);
  if (cf.r != spec.d - 1 || !cf.ks.empty()) return std::nullopt;
  return cf.P;
}

std::vector<MatZ> enumerate_row_family(const MatZ& transform, const MatZ& offset,
                                       const GammaSpec& spec, const Limits& limits) {
  const std::uint32_t free_rows = spec.d - 1;
  const std::uint64_t count =
      checked_pow(spec.ring.modulus, free_rows * spec.n, std::uint64_t(1) << 62);
  if (count > limits.max_code_words) fail(errc::too_large, "family enumeration exceeds the guard");
  // E = first d-1 columns of the transform; members are E X + offset.
  MatZ e(spec.ring, spec.m, free_rows);
  for (std::uint32_t i = 0; i < spec.m; ++i)
    for (std::uint32_t j = 0; j < free_rows; ++j) e.at(i, j) = transform(i, j);
  std::vector<MatZ> out;
  out.reserve(count);
  const std::uint64_t mod = spec.ring.modulus;
  MatZ x(spec.ring, free_rows, spec.n);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t t = idx;
    for (std::size_t pos = x.size(); pos-- > 0;) {
      x.data()[pos] = t % mod;
      t /= mod;
    }
    out.push_back(add(mul(e, x), offset));
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace

CliqueForm classify_max_clique(std::vector<MatZ> words, const GammaSpec& spec,
                               const Limits& limits) {
  for (const MatZ& w : words) check_vertex(w, spec);
  std::sort(words.begin(), words.end(), lex_less);
  if (std::adjacent_find(words.begin(), words.end()) != words.end())
    fail(errc::duplicate_word, "clique input repeats a vertex");

  const std::uint64_t expected =
      checked_pow(spec.ring.modulus, std::uint64_t(spec.d - 1) * spec.n, std::uint64_t(1) << 62);
  if (words.size() != expected)
    fail(errc::not_maximum, "clique has " + std::to_string(words.size()) + " vertices, maximum is " +
                                std::to_string(expected));
  if (!all_pairs_close(words, spec.d, limits))
    fail(errc::not_a_clique, "some pair is not adjacent");

  const MatZ offset = words[0];
  std::vector<MatZ> translated;
  translated.reserve(words.size());
  for (const MatZ& w : words) translated.push_back(sub(w, offset));

  if (auto p = row_transform(translated, spec)) {
    if (enumerate_row_family(*p, offset, spec, limits) == words)
      return CliqueForm{CliqueOrientation::row, *p, offset};
  }
  if (spec.m == spec.n) {
    std::vector<MatZ> transposed;
    transposed.reserve(translated.size());
    for (const MatZ& w : translated) transposed.push_back(transpose(w));
    if (auto pt = row_transform(transposed, spec)) {
      // [Y, 0] Q + offset with Q the transpose of the row transform found on
      // the transposed family.
      CliqueForm form{CliqueOrientation::column, transpose(*pt), offset};
      if (clique_from_form(form, spec, limits) == words) return form;
    }
  }
  fail(errc::unclassifiable_set, "no row or column family reconstructs the input");
}

std::vector<MatZ> clique_from_form(const CliqueForm& form, const GammaSpec& spec,
                                   const Limits& limits) {
  if (form.orientation == CliqueOrientation::row)
    return enumerate_row_family(form.transform, form.offset, spec, limits);
  // Transposed problem: the family { T^t [Y; 0] } transposed back.
  GammaSpec tspec = spec;
  std::vector<MatZ> rows = enumerate_row_family(transpose(form.transform),
                                                MatZ(spec.ring, spec.n, spec.m), tspec, limits);
  std::vector<MatZ> out;
  out.reserve(rows.size());
  for (const MatZ& r : rows) out.push_back(add(transpose(r), form.offset));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace zps
