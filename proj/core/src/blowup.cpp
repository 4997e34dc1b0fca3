#include "sudoku_spectra/blowup.hpp"

namespace sudoku_spectra {

const IntMatrix& SubstitutionSet::operator[](TemplateSymbol s) const {
  switch (s) {
    case TemplateSymbol::H: return h;
    case TemplateSymbol::V: return v;
    case TemplateSymbol::B: return b;
    case TemplateSymbol::D: return d;
    case TemplateSymbol::N: break;
  }
  return n;
}

SubstitutionSet substitution_set(std::size_t k) {
  const auto i_k = IntMatrix::identity(k);
  const auto j_k = IntMatrix::ones(k);
  const std::size_t kk = k * k;
  return SubstitutionSet{k,
                         kron(i_k, j_k),
                         kron(j_k, i_k),
                         IntMatrix::ones(kk),
                         IntMatrix::ones(kk) - IntMatrix::identity(kk),
                         IntMatrix(kk)};
}

IntMatrix blown_adjacency(const Tiling& t, std::size_t k) {
  const auto d = layers(t);
  const auto s = substitution_set(k);
  return kron(d.l_b, s.b) + kron(d.l_h, s.h) + kron(d.l_v, s.v) +
         kron(IntMatrix::identity(t.cell_count()), s.d);
}

IntMatrix blown_adjacency_from_template(const Tiling& t, std::size_t k) {
  const auto tm = template_matrix(t);
  const auto s = substitution_set(k);
  const std::size_t kk = k * k;
  IntMatrix out(tm.n * kk);
  for (std::size_t i = 0; i < tm.n; ++i) {
    for (std::size_t j = 0; j < tm.n; ++j) {
      const IntMatrix& block = s[tm(i, j)];
      for (std::size_t p = 0; p < kk; ++p)
        for (std::size_t q = 0; q < kk; ++q) out(i * kk + p, j * kk + q) = block(p, q);
    }
  }
  return out;
}

std::vector<std::size_t> subsquare_permutation(std::size_t m, std::size_t k) {
  const std::size_t big = k * m;
  std::vector<std::size_t> perm;
  perm.reserve(big * big);
  for (std::size_t cell = 0; cell < m * m; ++cell) {
    const std::size_t r = cell / m;
    const std::size_t c = cell % m;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) perm.push_back((k * r + a) * big + k * c + b);
  }
  return perm;
}

std::vector<std::size_t> invert_permutation(const std::vector<std::size_t>& perm) {
  std::vector<std::size_t> inv(perm.size());
  for (std::size_t s = 0; s < perm.size(); ++s) inv[perm[s]] = s;
  return inv;
}

IntMatrix permute(const IntMatrix& a, const std::vector<std::size_t>& perm) {
  if (!a.is_square() || a.rows() != perm.size()) {
    throw DimensionMismatch("permute: permutation length does not match the matrix");
  }
  IntMatrix out(a.rows());
  for (std::size_t s = 0; s < perm.size(); ++s)
    for (std::size_t t = 0; t < perm.size(); ++t) out(s, t) = a(perm[s], perm[t]);
  return out;
}

bool reconcile(const Tiling& t, std::size_t k) {
  const auto direct = adjacency(blow_up_tiling(t, k));
  return permute(direct, subsquare_permutation(t.size(), k)) == blown_adjacency(t, k);
}

}  // namespace sudoku_spectra
