#ifndef GALTOUR_INSTANCE_IO_HPP
#define GALTOUR_INSTANCE_IO_HPP

#include <cctype>
#include <cstddef>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dissociation.hpp"
#include "galois.hpp"
#include "presets.hpp"
#include "towers.hpp"

namespace galtour {

using ojson = nlohmann::ordered_json;

namespace detail {

inline std::string trim(std::string s)
{
  auto sp = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && sp(s.back()))
    s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && sp(s[i]))
    ++i;
  return s.substr(i);
}

inline std::size_t line_of(std::string const &text, std::size_t byte)
{
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n')
      ++line;
  return line;
}

// Parses JSON, rejecting duplicate keys inside any object.
inline ojson parse_json(std::string const &text)
{
  std::vector<std::set<std::string>> keys;
  auto cb = [&](int, ojson::parse_event_t ev, ojson &parsed) {
    switch (ev) {
    case ojson::parse_event_t::object_start:
      keys.emplace_back();
      break;
    case ojson::parse_event_t::object_end:
      keys.pop_back();
      break;
    case ojson::parse_event_t::key: {
      auto k = parsed.get<std::string>();
      if (!keys.back().insert(k).second)
        throw ParseError("duplicate key '" + k + "'");
      break;
    }
    default:
      break;
    }
    return true;
  };
  try {
    return ojson::parse(text, cb);
  } catch (ojson::parse_error const &e) {
    throw ParseError(e.what(), line_of(text, e.byte));
  }
}

inline std::vector<Permutation> parse_perm_list(ojson const &arr, std::size_t degree,
                                                std::string const &what)
{
  if (!arr.is_array())
    throw ParseError(what + " must be a list of cycle strings");
  std::vector<Permutation> r;
  for (auto const &v : arr) {
    if (!v.is_string())
      throw ParseError(what + " must be a list of cycle strings");
    r.push_back(parse_cycles(v.get<std::string>(), degree));
  }
  return r;
}

} // namespace detail

/**
 * Group text format: a `degree: N` line, then one generator per line in
 * 1-based cycle notation. Blank lines and `#` comments are ignored.
 */
inline Group parse_group_text(std::string const &text, Bounds bounds = {})
{
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0, degree = 0;
  bool have_degree = false;
  std::vector<Permutation> gens;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    std::string line = detail::trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty())
      continue;
    if (!have_degree) {
      auto colon = line.find(':');
      if (colon == std::string::npos || detail::trim(line.substr(0, colon)) != "degree")
        throw ParseError("expected 'degree: N'", lineno);
      std::string num = detail::trim(line.substr(colon + 1));
      if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad degree '" + num + "'", lineno);
      degree = std::stoul(num);
      if (degree == 0)
        throw ParseError("degree must be positive", lineno);
      have_degree = true;
      continue;
    }
    try {
      gens.push_back(parse_cycles(line, degree));
    } catch (ParseError const &e) {
      throw ParseError(e.what(), lineno);
    }
  }
  if (!have_degree)
    throw ParseError("missing 'degree: N' line");
  return generate(degree, gens, bounds.closure);
}

/**
 * JSON instance:
 * `{"degree": N, "generators": [...], "fields": {"name": [...]}, "distinguished": "name"}`.
 * Field values generate Gal(N/F). Without "distinguished", L is the closure.
 */
inline GaloisContext load_instance_json(std::string const &text, Bounds bounds = {},
                                        std::string const &id = "")
{
  ojson j = detail::parse_json(text);
  if (!j.is_object())
    throw ParseError("instance must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    static const std::set<std::string> known{"degree", "generators", "fields",
                                             "distinguished", "id"};
    if (!known.count(it.key()))
      throw ParseError("unknown instance key '" + it.key() + "'");
  }
  if (!j.contains("degree") || !j["degree"].is_number_unsigned() || j["degree"] == 0)
    throw ParseError("instance needs a positive integer 'degree'");
  std::size_t degree = j["degree"].get<std::size_t>();
  if (!j.contains("generators"))
    throw ParseError("instance needs 'generators'");
  Group g = generate(degree, detail::parse_perm_list(j["generators"], degree, "generators"),
                     bounds.closure);

  ContextBuilder b(g, bounds);
  if (j.contains("fields")) {
    if (!j["fields"].is_object())
      throw ParseError("'fields' must be an object");
    for (auto it = j["fields"].begin(); it != j["fields"].end(); ++it) {
      auto perms = detail::parse_perm_list(it.value(), degree, "field '" + it.key() + "'");
      for (auto const &p : perms)
        if (!g.index_of(p))
          throw PreconditionError("field '" + it.key() + "': " + to_cycles(p) +
                                  " is not in the group");
      b.name(it.key(), b.field_generated_by(perms));
    }
  }
  if (j.contains("distinguished")) {
    if (!j["distinguished"].is_string())
      throw ParseError("'distinguished' must be a field name");
    auto name = j["distinguished"].get<std::string>();
    if (name == "N")
      b.distinguished(b.top());
    else if (name == "K")
      b.distinguished(b.base());
    else
      b.distinguished(b.resolve_field(name));
  } else {
    b.distinguished(b.top());
  }
  if (j.contains("id") && j["id"].is_string())
    b.id(j["id"].get<std::string>());
  else
    b.id(id);
  return std::move(b).build();
}

inline std::string read_file(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw PreconditionError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// JSON instance or group text, chosen by the first non-blank character.
inline GaloisContext load_instance_file(std::string const &path, Bounds bounds = {})
{
  std::string text = read_file(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return load_instance_json(text, bounds, "file:" + path);
  Group g = parse_group_text(text, bounds);
  ContextBuilder b(g, bounds);
  b.id("file:" + path);
  return std::move(b).build();
}

namespace detail {

inline std::map<std::string, std::string> parse_kv(std::string const &s,
                                                   std::set<std::string> const &allowed,
                                                   std::string const &kind)
{
  std::map<std::string, std::string> r;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw ParseError(kind + ": expected key=value, got '" + item + "'");
    auto k = trim(item.substr(0, eq)), v = trim(item.substr(eq + 1));
    if (!allowed.count(k))
      throw ParseError(kind + ": unknown parameter '" + k + "'");
    if (!r.emplace(k, v).second)
      throw ParseError(kind + ": repeated parameter '" + k + "'");
  }
  for (auto const &k : allowed)
    if (!r.count(k))
      throw ParseError(kind + ": missing parameter '" + k + "'");
  return r;
}

inline nt::i64 parse_int(std::string const &v, std::string const &what)
{
  char *end = nullptr;
  long long x = std::strtoll(v.c_str(), &end, 10);
  if (v.empty() || *end)
    throw ParseError(what + ": bad integer '" + v + "'");
  return x;
}

} // namespace detail

/**
 * Instance selectors: `radical:a=2,n=6`, `cyclo-radical:n=2,d=3,l=3`,
 * `selmer-serre:n=5`, `cyclotomic:n=15`, `group:S4`, `file:<path>`.
 */
inline GaloisContext load_selector(std::string const &sel, Bounds bounds = {})
{
  auto colon = sel.find(':');
  if (colon == std::string::npos)
    throw ParseError("instance selector needs a 'kind:' prefix: '" + sel + "'");
  std::string kind = sel.substr(0, colon), rest = sel.substr(colon + 1);
  if (kind == "file")
    return load_instance_file(rest, bounds);
  if (kind == "radical") {
    auto kv = detail::parse_kv(rest, {"a", "n"}, kind);
    RadicalSpec s{nt::parse_rational(kv["a"]), detail::parse_int(kv["n"], "n")};
    return radical_context(s, bounds);
  }
  if (kind == "cyclo-radical") {
    auto kv = detail::parse_kv(rest, {"n", "d", "l"}, kind);
    CycloRadicalSpec s{detail::parse_int(kv["n"], "n"), detail::parse_int(kv["d"], "d"),
                       detail::parse_int(kv["l"], "l")};
    return cyclo_radical_context(s, bounds);
  }
  if (kind == "selmer-serre") {
    auto kv = detail::parse_kv(rest, {"n"}, kind);
    return selmer_serre_context(static_cast<int>(detail::parse_int(kv["n"], "n")), bounds);
  }
  if (kind == "cyclotomic") {
    auto kv = detail::parse_kv(rest, {"n"}, kind);
    return cyclotomic_context(detail::parse_int(kv["n"], "n"), bounds);
  }
  if (kind == "group")
    return group_context(rest, bounds);
  throw ParseError("unknown instance kind '" + kind + "'");
}

/// `["K","Q(sqrt2)","L"]` resolved against the context's names.
inline Tower parse_tower_json(GaloisContext const &ctx, std::string const &text)
{
  ojson j = detail::parse_json(text);
  if (!j.is_array() || j.empty())
    throw ParseError("tower must be a non-empty JSON list of field names");
  std::vector<std::string> names;
  for (auto const &v : j) {
    if (!v.is_string())
      throw ParseError("tower must be a non-empty JSON list of field names");
    names.push_back(v.get<std::string>());
  }
  return make_tower(ctx, names);
}

inline ojson tower_json(Tower const &t)
{
  ojson a = ojson::array();
  for (auto const &n : tower_names(t))
    a.push_back(n);
  return a;
}

inline ojson report_json(GaloisContext const &ctx, DissociationReport const &r)
{
  ojson j;
  j["M"] = ctx.label(r.M);
  j["deg_gal"] = r.degrees.gal;
  j["deg_int"] = r.degrees.int_;
  j["sub_kind"] = to_string(r.sub_kind);
  j["witness_tower"] = tower_json(r.witness_tower);
  return j;
}

/**
 * Named fields as a DOT digraph. Edges join covering pairs among the named
 * fields (smaller to larger); a Galois covering step is drawn as a double
 * edge.
 */
inline std::string to_dot(GaloisContext const &ctx)
{
  std::vector<FieldRef> nodes;
  for (auto const &[name, f] : ctx.names())
    if (std::find(nodes.begin(), nodes.end(), f) == nodes.end())
      nodes.push_back(f);
  std::sort(nodes.begin(), nodes.end(), [&](FieldRef a, FieldRef b) {
    auto da = ctx.subgroup(a).order(), db = ctx.subgroup(b).order();
    return da != db ? da > db : a < b;
  });

  auto quote = [](std::string const &s) {
    std::string r = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\')
        r += '\\';
      r += c;
    }
    return r + "\"";
  };
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n";
  for (auto f : nodes)
    os << "  " << quote(ctx.label(f)) << " [label="
       << quote(ctx.label(f) + " [deg " + std::to_string(degree(ctx, f, ctx.base())) +
                " over " + ctx.label(ctx.base()) + "]")
       << "];\n";
  for (auto lo : nodes) {
    for (auto hi : nodes) {
      if (lo == hi || !ctx.is_subfield(lo, hi))
        continue;
      bool covering = true;
      for (auto mid : nodes)
        if (mid != lo && mid != hi && ctx.is_subfield(lo, mid) && ctx.is_subfield(mid, hi))
          covering = false;
      if (!covering)
        continue;
      os << "  " << quote(ctx.label(lo)) << " -> " << quote(ctx.label(hi));
      if (is_galois(ctx, hi, lo))
        os << " [color=\"black:black\"]";
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

} // namespace galtour

#endif // GALTOUR_INSTANCE_IO_HPP
