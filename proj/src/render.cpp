#include "qucode/render.hpp"

#include <algorithm>
#include <sstream>

namespace qucode {

namespace {

std::string render_grid(const std::vector<std::vector<std::string>>& rows)
{
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    width.resize(std::max(width.size(), r.size()), 0);
    for (std::size_t c = 0; c < r.size(); ++c)
      width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size())
        line += std::string(width[c] - r[c].size(), ' ') + (c == 0 ? " | " : "  ");
    }
    out << line << '\n';
    if (i == 0) {
      std::size_t total = 0;
      for (std::size_t c = 0; c < width.size(); ++c)
        total += width[c] + (c + 1 < width.size() ? (c == 0 ? 3 : 2) : 0);
      out << std::string(total, '-') << '\n';
    }
  }
  return out.str();
}

}  // namespace

std::string render_coset_table(const CosetTable& t)
{
  const FiniteGroup& g = t.group;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{""};
  std::vector<std::string> titles;
  for (const auto& h : t.subgroups)
    titles.push_back(describe(h));
  header.insert(header.end(), titles.begin(), titles.end());
  rows.push_back(std::move(header));

  for (Element x = 0; x < g.order(); ++x) {
    std::vector<std::string> row{g.name(x)};
    for (std::size_t i = 0; i < t.length(); ++i) {
      const auto& block = t.cosets[i].blocks[t.cells[x][i]];
      if (t.subgroups[i].contains(x)) {
        row.push_back(titles[i]);
        continue;
      }
      std::string cell = "{";
      for (std::size_t k = 0; k < block.size(); ++k)
        cell += (k ? "," : "") + g.name(block[k]);
      row.push_back(cell + "}");
    }
    rows.push_back(std::move(row));
  }
  return render_grid(rows);
}

std::string describe_alphabet(const CoordinateAlphabet& a)
{
  switch (a.kind) {
    case AlphabetKind::CanonicalAbelian:
      return a.law ? a.law->label() : "abelian[" + std::to_string(a.size) + "]";
    case AlphabetKind::QuotientGroup:
      return (a.law ? a.law->label() : "quotient[" + std::to_string(a.size) + "]") + " (nonabelian)";
    case AlphabetKind::OpaqueLabels:
      return "opaque[" + std::to_string(a.size) + "]";
  }
  return {};
}

std::string render_code(const QuasiUniformCode& code)
{
  std::ostringstream out;
  out << "alphabets:";
  for (std::size_t i = 0; i < code.length(); ++i)
    out << ' ' << (i + 1) << '=' << describe_alphabet(code.alphabets()[i]);
  out << '\n';

  const auto& prov = code.provenance();
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{prov ? "element" : "#"};
  for (std::size_t i = 0; i < code.length(); ++i)
    header.push_back(prov ? describe(prov->subgroups[i]) : std::to_string(i + 1));
  rows.push_back(std::move(header));

  for (std::size_t r = 0; r < code.size(); ++r) {
    std::vector<std::string> row{prov ? prov->group.name(prov->representatives[r]) : std::to_string(r)};
    const auto& w = code.codewords()[r];
    for (std::size_t i = 0; i < code.length(); ++i)
      row.push_back(code.alphabets()[i].label_names.at(w[i]));
    rows.push_back(std::move(row));
  }
  out << render_grid(rows);
  return out.str();
}

}  // namespace qucode
