#include "qucode/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qucode/analysis.hpp"
#include "qucode/named_groups.hpp"
#include "qucode/render.hpp"
#include "qucode/representability.hpp"
#include "qucode/selection.hpp"
#include "qucode/serialize.hpp"

namespace qucode::cli {

namespace {

constexpr std::size_t max_analyze_length = 20;

const char* const example1_group = "C3xC3";
const char* const example1_subgroups = "gens:(1,0)|gens:(0,1)|gens:(1,1)|gens:(1,2)";
const char* const example2_group = "S3";
const char* const example2_subgroups = "gens:(12)|gens:(13)|gens:(23)";

void require(bool ok, const std::string& what)
{
  if (!ok)
    throw std::invalid_argument(what);
}

void check_caps(const Limits& caps)
{
  require(caps.max_order > 0 && caps.max_enumeration > 0 && caps.max_search > 0,
          "caps must be positive");
}

struct Instance {
  FiniteGroup group;
  std::vector<Subgroup> subgroups;
};

Instance load_instance(const RunConfig& c)
{
  require(!c.group_spec.empty(), "missing --group");
  require(!c.subgroup_spec.empty(), "missing --subgroups");
  FiniteGroup g = build_named_group(c.group_spec, c.caps);
  auto subs = select_subgroups(g, c.subgroup_spec, c.caps);
  return {std::move(g), std::move(subs)};
}

QuasiUniformCode load_code_file(const std::string& path, const Limits& caps)
{
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot read " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  SerializedCode s = code_from_json(j);
  if (!s.group_spec)
    return std::move(s.code);

  std::string selection;
  for (std::size_t i = 0; i < s.subgroup_specs.size(); ++i)
    selection += (i ? "|" : "") + s.subgroup_specs[i];
  FiniteGroup g = build_named_group(*s.group_spec, caps);
  QuasiUniformCode rebuilt = construct_code(g, select_subgroups(g, selection, caps));
  bool same = rebuilt.codewords() == s.code.codewords() && rebuilt.length() == s.code.length();
  for (std::size_t i = 0; same && i < rebuilt.length(); ++i) {
    same = rebuilt.alphabets()[i].kind == s.code.alphabets()[i].kind &&
           rebuilt.alphabets()[i].size == s.code.alphabets()[i].size;
  }
  if (!same)
    throw ParseError(path + ": codewords do not match the code rebuilt from group_spec");
  return rebuilt;
}

QuasiUniformCode code_for(const RunConfig& c)
{
  if (!c.input_path.empty()) {
    require(c.group_spec.empty() && c.subgroup_spec.empty(),
            "--input cannot be combined with --group or --subgroups");
    return load_code_file(c.input_path, c.caps);
  }
  auto inst = load_instance(c);
  return construct_code(inst.group, inst.subgroups);
}

std::string join_counts(const std::vector<std::int64_t>& v)
{
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::string word_text(const json& w)
{
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i)
    s += (i ? "," : "") + std::to_string(w[i].get<std::uint64_t>());
  return s + ")";
}

std::string subset_text(const json& s)
{
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i)
    out += (i ? "," : "") + std::to_string(s[i].get<std::size_t>());
  return out + "}";
}

json analyze_report(const QuasiUniformCode& code, const RunConfig& c)
{
  if (code.length() > max_analyze_length)
    throw CapExceeded("analyze supports at most " + std::to_string(max_analyze_length) +
                      " coordinates");
  if (c.center >= code.size())
    throw std::out_of_range("--center " + std::to_string(c.center) + " out of range for " +
                            std::to_string(code.size()) + " codewords");

  json r;
  r["code"] = {{"n", code.length()}, {"size", code.size()}};
  const auto qu = verify_quasi_uniform(code);
  r["quasi_uniform"] = to_json(qu);

  // the census is an average over centers and need not be integral off
  // quasi-uniform codes
  std::optional<WeightEnumerator> census;
  try {
    census = weight_enumerator_census(code);
  } catch (const std::domain_error&) {
  }
  json we{{"census", nullptr}, {"formula", nullptr}, {"agree", nullptr}, {"polynomial", nullptr}};
  if (census) {
    we["census"] = census->coeffs;
    we["polynomial"] = format_polynomial(*census);
  }
  if (qu.ok) {
    const auto profile = entropy_profile(code);
    r["entropy_profile"] = to_json(profile);
    const auto formula = weight_enumerator_formula(profile);
    we["formula"] = formula.coeffs;
    we["polynomial"] = format_polynomial(formula);
    we["agree"] = census && formula == *census;
  } else {
    r["entropy_profile"] = nullptr;
  }
  r["weight_enumerator"] = std::move(we);

  const auto dp = distance_profile(code, c.center);
  r["distance_profile"] = {
      {"center", dp.center}, {"counts", dp.counts}, {"center_independent", is_distance_invariant(code)}};

  json md{{"brute_force", nullptr}, {"group", nullptr}};
  if (code.size() >= 2) {
    md["brute_force"] = min_distance(code);
    const auto& prov = code.provenance();
    if (prov && code.group_structured())
      md["group"] = min_distance_group(prov->group, prov->subgroups);
  }
  r["min_distance"] = std::move(md);

  std::optional<std::uint64_t> q = c.q;
  std::string why_not;
  if (!q) {
    const std::size_t first = code.alphabets().front().size;
    bool uniform = true;
    for (const auto& a : code.alphabets())
      uniform = uniform && a.size == first;
    if (!uniform)
      why_not = "alphabet sizes differ; pass -q";
    else if (first < 2)
      why_not = "alphabet of size 1; pass -q";
    else
      q = first;
  }
  if (q)
    r["almost_affine"] = to_json(is_almost_affine(code, *q));
  else
    r["almost_affine"] = {{"applicable", false}, {"reason", why_not}};
  return r;
}

void print_analyze_table(const json& r, std::ostream& out)
{
  out << "code: n=" << r["code"]["n"] << " |C|=" << r["code"]["size"] << '\n';
  const auto& qu = r["quasi_uniform"];
  out << "quasi-uniform: " << (qu["ok"].get<bool>() ? "yes" : "no");
  if (qu.contains("witness"))
    out << " (subset " << subset_text(qu["witness"]["subset"]) << ')';
  out << '\n';

  if (!r["entropy_profile"].is_null()) {
    out << "support sizes:";
    for (const auto& e : r["entropy_profile"])
      out << ' ' << subset_text(e["subset"]) << '=' << e["support"];
    out << '\n';
  }

  const auto& we = r["weight_enumerator"];
  if (we["census"].is_null()) {
    out << "weight enumerator (census): n/a (pair counts not divisible by |C|)\n";
  } else {
    WeightEnumerator census{we["census"].get<std::vector<std::int64_t>>()};
    out << "weight enumerator (census): " << format_polynomial(census) << "  " << join_counts(census.coeffs)
        << '\n';
  }
  if (we["formula"].is_null()) {
    out << "weight enumerator (formula): n/a (code is not quasi-uniform)\n";
  } else {
    WeightEnumerator f{we["formula"].get<std::vector<std::int64_t>>()};
    out << "weight enumerator (formula): " << format_polynomial(f) << "  " << join_counts(f.coeffs)
        << (we["agree"].get<bool>() ? "" : "  MISMATCH") << '\n';
  }

  const auto& dp = r["distance_profile"];
  out << "distance profile from codeword " << dp["center"] << ": "
      << join_counts(dp["counts"].get<std::vector<std::int64_t>>())
      << (dp["center_independent"].get<bool>() ? " (same for every center)"
                                               : " (depends on the center)")
      << '\n';

  const auto& md = r["min_distance"];
  out << "minimum distance (brute force): "
      << (md["brute_force"].is_null() ? "n/a (fewer than two codewords)" : md["brute_force"].dump())
      << '\n';
  out << "minimum distance (subgroup formula): "
      << (md["group"].is_null() ? "n/a" : md["group"].dump());
  if (!md["group"].is_null() && md["group"] != md["brute_force"])
    out << "  MISMATCH";
  out << '\n';

  const auto& aa = r["almost_affine"];
  if (aa.contains("applicable")) {
    out << "almost affine: n/a (" << aa["reason"].get<std::string>() << ")\n";
  } else {
    out << "almost affine (q=" << aa["q"] << "): " << (aa["ok"].get<bool>() ? "yes" : "no");
    if (aa.contains("witness"))
      out << ", witness " << subset_text(aa["witness"]) << ": " << aa["reason"].get<std::string>();
    out << '\n';
  }
}

void print_verify_table(const json& r, std::ostream& out)
{
  out << "quasi-uniform: " << (r["ok"].get<bool>() ? "yes" : "no") << '\n';
  if (r.contains("witness")) {
    const auto& w = r["witness"];
    out << "witness subset " << subset_text(w["subset"]) << ": tuple "
        << word_text(w["tuples"][0]) << " occurs " << w["multiplicities"][0] << " times, tuple "
        << word_text(w["tuples"][1]) << " occurs " << w["multiplicities"][1] << " times\n";
  }
}

int represent(const RunConfig& c, std::ostream& out)
{
  require(c.order_multiple > 0, "--order-multiple must be positive");
  auto inst = load_instance(c);
  SearchOptions opts;
  opts.limits = c.caps;
  opts.order_multiple = c.order_multiple;
  const auto search = find_abelian_representation(inst.group, inst.subgroups, opts);
  const auto target = index_vector(inst.group, inst.subgroups);

  json r = to_json(search);
  json iv = json::array();
  for (CoordinateSet a : subsets_by_size(target.n))
    iv.push_back({{"subset", subset_to_json(a)}, {"index", target[a]}});
  r["index_vector"] = std::move(iv);
  if (!search.representation && c.order_multiple == 1)
    r["note"] = "search restricted to abelian groups of order |G|; --order-multiple widens it";

  if (c.output == OutputFormat::Json) {
    out << r.dump(2) << '\n';
    return exit_ok;
  }
  out << "target indices:";
  for (const auto& e : r["index_vector"])
    out << ' ' << subset_text(e["subset"]) << '=' << e["index"];
  out << '\n';
  if (search.representation) {
    out << "representable: yes, by " << search.representation->abelian_group.label() << " with";
    for (const auto& h : search.representation->subgroups)
      out << ' ' << describe(h);
    out << '\n';
  } else {
    out << "representable: no\n";
  }
  out << "orders searched:";
  for (auto m : search.orders_searched)
    out << ' ' << m;
  out << "\ncandidates checked: " << search.checked_candidates << '\n';
  if (r.contains("note"))
    out << "note: " << r["note"].get<std::string>() << '\n';
  return exit_ok;
}

int dispatch(const RunConfig& c, std::ostream& out)
{
  check_caps(c.caps);
  switch (c.command) {
    case Command::Construct: {
      auto inst = load_instance(c);
      const auto table = build_coset_table(inst.group, inst.subgroups);
      const auto code = label_coordinates(reduce_code(table));
      if (c.output == OutputFormat::Json)
        out << code_to_json(code).dump(2) << '\n';
      else
        out << render_coset_table(table) << '\n' << render_code(code);
      return exit_ok;
    }
    case Command::Analyze: {
      const auto report = analyze_report(code_for(c), c);
      if (c.output == OutputFormat::Json)
        out << report.dump(2) << '\n';
      else
        print_analyze_table(report, out);
      return exit_ok;
    }
    case Command::Verify: {
      const auto report = to_json(verify_quasi_uniform(code_for(c)));
      if (c.output == OutputFormat::Json)
        out << report.dump(2) << '\n';
      else
        print_verify_table(report, out);
      return exit_ok;
    }
    case Command::Represent:
      return represent(c, out);
    case Command::RegenPaperExamples:
      for (const auto& f : regen_paper_examples(c.out_dir, c.caps))
        out << "wrote " << (std::filesystem::path(c.out_dir) / f).string() << '\n';
      return exit_ok;
  }
  throw std::invalid_argument("unknown command");
}

void write_file(const std::filesystem::path& p, const std::string& text)
{
  std::ofstream f(p, std::ios::binary | std::ios::trunc);
  if (!f)
    throw std::invalid_argument("cannot write " + p.string());
  f << text;
}

}  // namespace

Command command_from_string(const std::string& s)
{
  if (s == "construct") return Command::Construct;
  if (s == "analyze") return Command::Analyze;
  if (s == "represent") return Command::Represent;
  if (s == "verify") return Command::Verify;
  if (s == "regen-paper-examples") return Command::RegenPaperExamples;
  throw std::invalid_argument("unknown command '" + s + "'");
}

std::string to_string(Command c)
{
  switch (c) {
    case Command::Construct: return "construct";
    case Command::Analyze: return "analyze";
    case Command::Represent: return "represent";
    case Command::Verify: return "verify";
    case Command::RegenPaperExamples: return "regen-paper-examples";
  }
  return "?";
}

std::vector<std::string> regen_paper_examples(const std::string& dir, const Limits& caps)
{
  namespace fs = std::filesystem;
  fs::create_directories(dir);

  const FiniteGroup g1 = build_named_group(example1_group, caps);
  const auto t1 = build_coset_table(g1, select_subgroups(g1, example1_subgroups, caps));
  const auto code1 = label_coordinates(reduce_code(t1));
  const auto w1 = weight_enumerator_formula(entropy_profile(code1));

  const FiniteGroup g2 = build_named_group(example2_group, caps);
  const auto t2 = build_coset_table(g2, select_subgroups(g2, example2_subgroups, caps));

  std::ostringstream we;
  we << "W(x,y) = " << format_polynomial(w1) << '\n'
     << "coefficients: " << join_counts(w1.coeffs) << '\n'
     << "minimum distance: " << min_distance(code1) << '\n';

  const std::vector<std::pair<std::string, std::string>> files{
      {"example1_coset_table.txt", render_coset_table(t1)},
      {"example1_code.txt", render_code(code1)},
      {"example1_weight_enumerator.txt", we.str()},
      {"example2_coset_table.txt", render_coset_table(t2)},
  };
  std::vector<std::string> names;
  for (const auto& [name, text] : files) {
    write_file(fs::path(dir) / name, text);
    names.push_back(name);
  }
  return names;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
  try {
    return dispatch(config, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_parse;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return exit_cap;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << '\n';
    return exit_internal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_internal;
  }
}

}  // namespace qucode::cli
