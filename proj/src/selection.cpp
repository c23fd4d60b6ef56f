#include "qucode/selection.hpp"

#include <charconv>

namespace qucode {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep)
{
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos)
      return out;
    start = pos + 1;
  }
}

std::string_view trim(std::string_view s)
{
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  return s;
}

Element resolve(const FiniteGroup& g, std::string_view name)
{
  if (auto e = g.find(name))
    return *e;
  // a cyclic group's "1" may also be written "(1)"
  if (name.size() >= 2 && name.front() == '(' && name.back() == ')') {
    if (auto e = g.find(name.substr(1, name.size() - 2)))
      return *e;
  }
  throw ParseError("no element named '" + std::string(name) + "' in " + g.label());
}

}  // namespace

std::vector<Subgroup> select_subgroups(const FiniteGroup& g, std::string_view selection,
                                       const Limits& limits)
{
  std::vector<Subgroup> out;
  selection = trim(selection);
  if (selection.empty())
    throw ParseError("empty subgroup selection");

  for (auto item : split(selection, '|')) {
    item = trim(item);
    if (item.starts_with("gens:")) {
      std::vector<Element> gens;
      auto body = trim(item.substr(5));
      if (!body.empty()) {
        for (auto name : split(body, ';')) {
          name = trim(name);
          if (name.empty())
            throw ParseError("empty generator name in '" + std::string(item) + "'");
          gens.push_back(resolve(g, name));
        }
      }
      out.push_back(subgroup_generated(g, gens));
    } else if (item.starts_with("all-index:")) {
      auto digits = item.substr(10);
      std::size_t k = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
      if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() || k == 0)
        throw ParseError("all-index needs a positive integer, got '" + std::string(digits) + "'");
      for (auto& h : all_subgroups(g, limits)) {
        if (h.index() == k)
          out.push_back(std::move(h));
      }
    } else if (item == "all-nontrivial") {
      for (auto& h : all_subgroups(g, limits)) {
        if (!h.is_trivial() && !h.is_whole())
          out.push_back(std::move(h));
      }
    } else if (item == "all-normal-proper") {
      for (auto& h : all_subgroups(g, limits)) {
        if (!h.is_whole() && is_normal(g, h))
          out.push_back(std::move(h));
      }
    } else {
      throw ParseError("unknown subgroup selector '" + std::string(item) + "'");
    }
  }
  if (out.empty())
    throw ParseError("subgroup selection '" + std::string(selection) + "' matched no subgroups");
  return out;
}

std::string gens_spec(const Subgroup& h)
{
  std::string out = "gens:";
  bool first = true;
  for (Element x : generators_of(h)) {
    out += (first ? "" : ";") + h.parent().name(x);
    first = false;
  }
  return out;
}

}  // namespace qucode
