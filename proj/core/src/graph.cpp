#include "sudoku_spectra/graph.hpp"

#include <algorithm>
#include <sstream>

namespace sudoku_spectra {

LayerDecomposition layers(const Tiling& t) {
  const std::size_t m = t.size();
  const std::size_t n = t.cell_count();
  LayerDecomposition d{m, t.block_count(), IntMatrix(n), IntMatrix(n), IntMatrix(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (t.block_of(i) == t.block_of(j)) {
        d.l_b(i, j) = 1;
      } else if (t.row(i) == t.row(j)) {
        d.l_h(i, j) = 1;
      } else if (t.col(i) == t.col(j)) {
        d.l_v(i, j) = 1;
      }
    }
  }
  return d;
}

IntMatrix adjacency(const Tiling& t) {
  const auto d = layers(t);
  return d.l_b + d.l_h + d.l_v;
}

BlockRowProfile block_row_profile(const Tiling& t, Axis axis) {
  const std::size_t m = t.size();
  BlockRowProfile p{
      axis, std::vector<std::vector<std::size_t>>(m, std::vector<std::size_t>(t.block_count(), 0))};
  for (std::size_t c = 0; c < t.cell_count(); ++c) {
    const std::size_t line = axis == Axis::Row ? t.row(c) : t.col(c);
    ++p.counts[line][t.block_of(c)];
  }
  return p;
}

TemplateMatrix template_matrix(const Tiling& t) {
  const std::size_t n = t.cell_count();
  TemplateMatrix tm{n, std::vector<TemplateSymbol>(n * n, TemplateSymbol::N)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      TemplateSymbol s = TemplateSymbol::N;
      if (i == j) {
        s = TemplateSymbol::D;
      } else if (t.block_of(i) == t.block_of(j)) {
        s = TemplateSymbol::B;
      } else if (t.row(i) == t.row(j)) {
        s = TemplateSymbol::H;
      } else if (t.col(i) == t.col(j)) {
        s = TemplateSymbol::V;
      }
      tm.symbols[i * n + j] = s;
    }
  }
  return tm;
}

std::string render_template(const TemplateMatrix& tm) {
  std::ostringstream out;
  for (std::size_t i = 0; i < tm.n; ++i) {
    for (std::size_t j = 0; j < tm.n; ++j) {
      if (j) out << ' ';
      out << static_cast<char>(tm(i, j));
    }
    out << '\n';
  }
  return out.str();
}

namespace {

void require_adjacency_shape(const IntMatrix& a, std::size_t n, const char* name) {
  if (a.rows() != n || a.cols() != n) {
    throw StructureViolation(std::string(name) + " is not " + std::to_string(n) + "x" +
                             std::to_string(n));
  }
  if (!is_adjacency_matrix(a)) {
    throw StructureViolation(std::string(name) + " is not a symmetric 0/1 zero-diagonal matrix");
  }
}

// Part sizes of the complete multipartite graph that `a` induces on `vertices`.
// Non-adjacency must be an equivalence relation there; the classes are the parts.
std::vector<std::size_t> multipartite_parts(const IntMatrix& a,
                                            const std::vector<std::size_t>& vertices,
                                            const std::string& where) {
  const std::size_t n = vertices.size();
  std::vector<std::size_t> part(n, n);
  std::vector<std::size_t> sizes;
  for (std::size_t i = 0; i < n; ++i) {
    if (part[i] != n) continue;
    const std::size_t id = sizes.size();
    sizes.push_back(0);
    for (std::size_t j = i; j < n; ++j) {
      if (j == i || a(vertices[i], vertices[j]) == 0) {
        if (part[j] != n) {
          throw StructureViolation(where + ": non-adjacency is not transitive at cell " +
                                   std::to_string(vertices[j] + 1));
        }
        part[j] = id;
        ++sizes[id];
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = a(vertices[i], vertices[j]) != 0;
      if (adjacent == (part[i] == part[j])) {
        throw StructureViolation(where + ": cells " + std::to_string(vertices[i] + 1) + " and " +
                                 std::to_string(vertices[j] + 1) +
                                 " break the complete multipartite pattern");
      }
    }
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

StructureReport verify_layer_structure(const LayerDecomposition& d) {
  const std::size_t m = d.m;
  const std::size_t n = m * m;
  const std::size_t blocks = d.blocks ? d.blocks : m;
  if (m == 0 || n % blocks != 0) throw StructureViolation("block count does not divide the cell count");
  const std::size_t block_size = n / blocks;
  require_adjacency_shape(d.l_b, n, "l_b");
  require_adjacency_shape(d.l_h, n, "l_h");
  require_adjacency_shape(d.l_v, n, "l_v");

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int layers_hit = (d.l_b(i, j) != 0) + (d.l_h(i, j) != 0) + (d.l_v(i, j) != 0);
      if (layers_hit > 1) {
        throw StructureViolation("cells " + std::to_string(i + 1) + " and " +
                                 std::to_string(j + 1) + " are joined in more than one layer");
      }
      if (d.l_h(i, j) != 0 && i / m != j / m) {
        throw StructureViolation("l_h joins cells " + std::to_string(i + 1) + " and " +
                                 std::to_string(j + 1) + " in different rows");
      }
      if (d.l_v(i, j) != 0 && i % m != j % m) {
        throw StructureViolation("l_v joins cells " + std::to_string(i + 1) + " and " +
                                 std::to_string(j + 1) + " in different columns");
      }
    }
  }

  StructureReport report;

  // l_b: connected components must be m cliques of size m.
  std::vector<bool> seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> members{s};
    seen[s] = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (d.l_b(s, j) != 0) {
        members.push_back(j);
        seen[j] = true;
      }
    }
    const std::string where = "block containing cell " + std::to_string(s + 1);
    for (std::size_t a : members) {
      std::size_t degree = 0;
      for (std::size_t j = 0; j < n; ++j) degree += d.l_b(a, j) != 0;
      if (degree + 1 != members.size()) {
        throw StructureViolation(where + " is not a clique (cell " + std::to_string(a + 1) + ")");
      }
      for (std::size_t b : members) {
        if (a != b && d.l_b(a, b) == 0) {
          throw StructureViolation(where + " misses edge " + std::to_string(a + 1) + "-" +
                                   std::to_string(b + 1));
        }
      }
    }
    if (members.size() != block_size) {
      throw StructureViolation(where + " has " + std::to_string(members.size()) +
                               " cells, expected " + std::to_string(block_size));
    }
    report.block_cliques.push_back(members.size());
  }
  if (report.block_cliques.size() != blocks) {
    throw StructureViolation("l_b has " + std::to_string(report.block_cliques.size()) +
                             " cliques, expected " + std::to_string(blocks));
  }

  for (std::size_t line = 0; line < m; ++line) {
    std::vector<std::size_t> row_cells, col_cells;
    for (std::size_t i = 0; i < m; ++i) {
      row_cells.push_back(line * m + i);
      col_cells.push_back(i * m + line);
    }
    report.row_parts.push_back(
        multipartite_parts(d.l_h, row_cells, "row " + std::to_string(line + 1)));
    report.column_parts.push_back(
        multipartite_parts(d.l_v, col_cells, "column " + std::to_string(line + 1)));
  }
  return report;
}

}  // namespace sudoku_spectra
