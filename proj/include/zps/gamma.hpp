#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <utility>
#include <vector>

#include "zps/limits.hpp"
#include "zps/matrix.hpp"
#include "zps/rank_code.hpp"

namespace zps {

// Rank-proximity graph on the full matrix space: vertices are all m x n
// matrices over Z_{p^s}, with A ~ B iff A != B and inner rank of A - B is
// below d. Independent sets are exactly codes of minimum distance >= d.
struct GammaSpec {
  RingSpec ring;
  std::uint32_t m = 0, n = 0, d = 0;
};

// Requires 2 <= d <= min(m, n) and m <= n (transpose the problem otherwise).
GammaSpec make_gamma_spec(const RingSpec& ring, std::uint32_t m, std::uint32_t n, std::uint32_t d);

// p^{smn}; overflow past 2^62.
std::uint64_t vertex_count(const GammaSpec& spec);

// Row-major big-endian base-p^s encoding; numeric order equals lexicographic
// order on entries.
std::uint64_t encode_vertex(const MatZ& a);
MatZ decode_vertex(std::uint64_t index, const GammaSpec& spec);

bool adjacent(const MatZ& a, const MatZ& b, const GammaSpec& spec);

// Materialized graph in Cayley form: the difference set (nonzero matrices of
// inner rank < d) plus a rank-below-d table indexed by vertex code.
struct ExplicitGraph {
  GammaSpec spec;
  std::uint64_t n_vertices = 0;
  std::vector<MatZ> deltas;
  std::vector<char> low_rank;  // low_rank[encode(X)] = 1 iff inner_rank(X) < d

  std::uint64_t degree() const { return deltas.size(); }
  bool adjacent_idx(std::uint64_t u, std::uint64_t v) const;
  std::vector<std::uint64_t> neighbors(std::uint64_t u) const;  // ascending
};

ExplicitGraph build_explicit_graph(const GammaSpec& spec, const Limits& limits = {});

// One "u v" line per edge with u < v, ascending.
void write_edge_list(const ExplicitGraph& graph, std::ostream& out);

bool is_connected(const GammaSpec& spec, const Limits& limits = {});

// Walk from a to b stepping through the factored difference, at most d - 1
// diagonal terms per step; length is within ceil(rank / (d-1)).
std::vector<MatZ> path_between(const MatZ& a, const MatZ& b, const GammaSpec& spec);

// Checks that a vertex map preserves adjacency and non-adjacency on sampled
// pairs (samples > 0) or on every unordered pair (samples == 0, explicit
// scale only). Both sides are recomputed through the full rank pipeline.
bool preserves_adjacency(const GammaSpec& spec, const std::function<MatZ(const MatZ&)>& map,
                         std::uint64_t samples, std::uint64_t seed, const Limits& limits = {});

// The map X -> X + a.
bool verify_translation_automorphism(const GammaSpec& spec, const MatZ& a, std::uint64_t samples,
                                     std::uint64_t seed, const Limits& limits = {});

// The matrices supported on the top d - 1 rows: a maximum clique, sorted.
std::vector<MatZ> canonical_max_clique(const GammaSpec& spec, const Limits& limits = {});

// Lifted evaluation-code MRD witness for this spec (maximum independent set).
RankCode max_independent_code(const GammaSpec& spec, const Limits& limits = {});

enum class CertKind { alpha, omega, chi, chi_complement };

const char* cert_kind_name(CertKind kind) noexcept;

// Exact-invariant certificate: a witness set giving the lower bound and a
// partition of the whole vertex set into translates giving the matching
// upper bound. Every block and the cover are verified directly.
struct InvariantCertificate {
  CertKind kind = CertKind::alpha;
  std::uint64_t claimed_value = 0;
  std::vector<MatZ> witness;
  std::vector<MatZ> partition_base;     // blocks are partition_base + offset
  std::vector<MatZ> partition_offsets;
  bool checks_passed = false;
  std::vector<std::string> check_log;   // one line per verified condition
  std::string partition_description;
};

InvariantCertificate alpha_certificate(const GammaSpec& spec, const Limits& limits = {});
InvariantCertificate omega_certificate(const GammaSpec& spec, const Limits& limits = {});
InvariantCertificate chi_certificate(const GammaSpec& spec, const Limits& limits = {});
InvariantCertificate complement_chi_certificate(const GammaSpec& spec, const Limits& limits = {});

// Dense undirected graph for the exhaustive solvers and synthetic cases.
struct SmallGraph {
  std::uint32_t n = 0;
  std::vector<std::vector<std::uint64_t>> adj;  // bitset rows

  static SmallGraph empty_graph(std::uint32_t n);
  static SmallGraph complete(std::uint32_t n);
  void add_edge(std::uint32_t u, std::uint32_t v);
  bool has_edge(std::uint32_t u, std::uint32_t v) const;
};

SmallGraph to_small_graph(const ExplicitGraph& graph);
SmallGraph complement(const SmallGraph& g);

std::uint32_t brute_omega(const SmallGraph& g);  // branch and bound; n <= 512
std::uint32_t brute_alpha(const SmallGraph& g);  // via complement clique; n <= 64
std::pair<std::uint32_t, std::uint32_t> brute_alpha_omega(const SmallGraph& g);

enum class CliqueOrientation { row, column };

const char* orientation_name(CliqueOrientation o) noexcept;

// A maximum clique is a common-row-space or common-column-space family:
// { T * [X; 0] + offset } (row) or { [Y, 0] * T + offset } (column).
struct CliqueForm {
  CliqueOrientation orientation = CliqueOrientation::row;
  MatZ transform;
  MatZ offset;
};

// not_maximum when the cardinality is wrong, not_a_clique when some pair is
// too far apart, unclassifiable_set when no orientation reconstructs the set.
CliqueForm classify_max_clique(std::vector<MatZ> words, const GammaSpec& spec,
                               const Limits& limits = {});

std::vector<MatZ> clique_from_form(const CliqueForm& form, const GammaSpec& spec,
                                   const Limits& limits = {});

}  // namespace zps
