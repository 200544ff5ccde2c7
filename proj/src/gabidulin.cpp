#include "zps/gabidulin.hpp"

#include <string>

#include "zps/field.hpp"

namespace zps {

RankCode gabidulin_code(std::uint64_t p, std::uint32_t m, std::uint32_t n, std::uint32_t d,
                        const Limits& limits) {
  if (!(2 <= d && d <= m && m <= n))
    fail(errc::bad_parameters, "generator requires 2 <= d <= m <= n");
  const FieldSpec field = build_field(p, n);
  const std::uint32_t k = m - d + 1;
  std::uint64_t total = 0;
  try {
    total = checked_pow(field.q, k, std::uint64_t(1) << 62);
  } catch (const error&) {
    fail(errc::too_large, "code size overflows the exact range");
  }
  if (total > limits.max_code_words)
    fail(errc::too_large, "code would have " + std::to_string(total) + " words");

  // Evaluation points: the first m basis elements of F_{p^n} over F_p.
  std::vector<FieldElement> points;
  points.reserve(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    FieldElement g = fe_zero(field);
    g.c[i] = 1;
    points.push_back(std::move(g));
  }

  const RingSpec fp{p, 1, p};
  std::vector<MatZ> words;
  words.reserve(total);
  LinearizedPoly f{&field, std::vector<FieldElement>(k, fe_zero(field))};
  // Coefficient tuples in lexicographic order: a_0 most significant.
  std::vector<std::uint64_t> idx(k, 0);
  for (std::uint64_t count = 0; count < total; ++count) {
    std::uint64_t t = count;
    for (std::uint32_t i = k; i-- > 0;) {
      idx[i] = t % field.q;
      t /= field.q;
    }
    for (std::uint32_t i = 0; i < k; ++i) f.coeffs[i] = fe_from_index(field, idx[i]);
    MatZ word(fp, m, n);
    for (std::uint32_t i = 0; i < m; ++i) {
      FieldElement v = linearized_eval(f, points[i]);
      for (std::uint32_t j = 0; j < n; ++j) word.at(i, j) = v.c[j];
    }
    words.push_back(std::move(word));
  }
  RankCode code = make_rank_code(fp, m, n, d, std::move(words));
  if (code.words.size() != total) fail(errc::internal, "evaluation map was not injective");
  return code;
}

}  // namespace zps
