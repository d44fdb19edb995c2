#include "iel/kripke.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "iel/syntax.hpp"
#include "text_format.hpp"

namespace iel {

std::string_view to_string(Logic logic) {
  switch (logic) {
    case Logic::IntK:
      return "INTK";
    case Logic::IELMinus:
      return "IEL-";
    case Logic::IEL:
      return "IEL";
  }
  return "?";
}

Logic parse_logic(std::string_view text) {
  const std::string s = detail::lower(detail::trim(text));
  if (s == "iel") return Logic::IEL;
  if (s == "iel-" || s == "ielminus" || s == "iel_minus") return Logic::IELMinus;
  if (s == "intk" || s == "int_k") return Logic::IntK;
  throw std::invalid_argument("unknown logic '" + std::string(text) + "' (expected IEL, IEL- or INTK)");
}

std::size_t KripkeModel::index_of(int id) const {
  auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) throw ModelError("unknown world " + std::to_string(id));
  return static_cast<std::size_t>(it - ids.begin());
}

WorldSet KripkeModel::valuation(std::string_view atom) const {
  auto it = std::lower_bound(atoms.begin(), atoms.end(), atom);
  if (it == atoms.end() || *it != atom) return 0;
  return val[static_cast<std::size_t>(it - atoms.begin())];
}

namespace {

void close_preorder(std::vector<WorldSet>& r) {
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) r[i] |= bit(i);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i] & bit(k)) r[i] |= r[k];
}

WorldSet up_closure(const std::vector<WorldSet>& r, WorldSet s) {
  WorldSet out = s;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (s & bit(i)) out |= r[i];
  return out;
}

std::vector<int> ids_of(const KripkeModel& m, WorldSet s) {
  std::vector<int> out;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (s & bit(i)) out.push_back(m.ids[i]);
  return out;
}

}  // namespace

KripkeModel build_model(const ModelSpec& spec, std::vector<std::string>* warnings) {
  if (spec.worlds.empty()) throw ModelError("a model needs at least one world");
  if (spec.worlds.size() > kMaxWorlds)
    throw ModelError("at most " + std::to_string(kMaxWorlds) + " worlds are supported");
  KripkeModel m;
  m.logic = spec.logic;
  m.ids = spec.worlds;
  std::set<int> distinct(m.ids.begin(), m.ids.end());
  if (distinct.size() != m.ids.size()) throw ModelError("duplicate world id");
  const std::size_t n = m.size();
  m.r.assign(n, 0);
  m.e.assign(n, 0);
  for (auto [u, v] : spec.r) m.r[m.index_of(u)] |= bit(m.index_of(v));
  for (auto [u, v] : spec.e) m.e[m.index_of(u)] |= bit(m.index_of(v));
  close_preorder(m.r);

  std::map<std::string, WorldSet> val;
  for (const auto& [atom, worlds] : spec.val) {
    WorldSet& s = val[atom];
    for (int w : worlds) s |= bit(m.index_of(w));
  }
  for (auto& [atom, s] : val) {
    WorldSet closed = up_closure(m.r, s);
    if (warnings && closed != s) {
      for (int id : ids_of(m, closed & ~s))
        warnings->push_back("monotone closure added " + atom + " at world " + std::to_string(id));
    }
    m.atoms.push_back(atom);
    m.val.push_back(closed);
  }
  return m;
}

ValidationReport validate(const KripkeModel& m, Logic as) {
  ValidationReport report;
  const std::size_t n = m.size();
  auto add = [&](std::string condition, std::vector<int> witnesses) {
    report.violations.push_back({std::move(condition), std::move(witnesses)});
  };
  if (n == 0) add("non-empty", {});
  if (m.r.size() != n || m.e.size() != n || m.val.size() != m.atoms.size()) {
    add("well-formed", {});
    return report;
  }
  for (std::size_t u = 0; u < n; ++u) {
    if (!(m.r[u] & bit(u))) add("R-reflexive", {m.ids[u]});
    if ((m.r[u] | m.e[u]) & ~m.all()) add("world-range", {m.ids[u]});
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      if (!(m.r[u] & bit(v))) continue;
      if (m.r[v] & ~m.r[u]) {
        for (int w : ids_of(m, m.r[v] & ~m.r[u])) add("R-transitive", {m.ids[u], m.ids[v], w});
      }
      if (m.e[v] & ~m.e[u]) add("E-monotone", {m.ids[u], m.ids[v]});
    }
  for (std::size_t a = 0; a < m.atoms.size(); ++a)
    for (std::size_t u = 0; u < n; ++u)
      if ((m.val[a] & bit(u)) && (m.r[u] & ~m.val[a]))
        add("valuation-monotone:" + m.atoms[a], {m.ids[u]});
  if (as != Logic::IntK) {
    for (std::size_t u = 0; u < n; ++u)
      for (int v : ids_of(m, m.e[u] & ~m.r[u])) add("E-subset-R", {m.ids[u], v});
  }
  if (as == Logic::IEL) {
    for (std::size_t u = 0; u < n; ++u)
      if (m.e[u] == 0) add("E-serial", {m.ids[u]});
  }
  return report;
}

CompiledFormula::CompiledFormula(const Formula& f, const std::vector<std::string>& atoms,
                                 Language language)
    : language_(language) {
  if (language == Language::Intuitionistic) {
    require_intuitionistic(f, "forcing");
  } else {
    require_bimodal(f, "classical forcing");
  }
  std::vector<Formula> subs = subformulas(f);
  std::unordered_map<Formula, std::int32_t> slot;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const Formula& g = subs[i];
    Op op{g.kind()};
    if (g.is(Kind::Atom)) {
      auto it = std::find(atoms.begin(), atoms.end(), g.name());
      op.a = it == atoms.end() ? -1 : static_cast<std::int32_t>(it - atoms.begin());
    } else if (g.is_binary()) {
      op.a = slot.at(g.left());
      op.b = slot.at(g.right());
    } else if (g.is_unary()) {
      op.a = slot.at(g.body());
    }
    slot.emplace(g, static_cast<std::int32_t>(i));
    ops_.push_back(op);
  }
}

WorldSet CompiledFormula::eval(std::size_t n, const WorldSet* r, const WorldSet* e,
                               const WorldSet* val) const {
  constexpr std::size_t kInline = 128;
  std::array<WorldSet, kInline> inline_slots;
  std::vector<WorldSet> heap_slots;
  WorldSet* v = inline_slots.data();
  if (ops_.size() > kInline) {
    heap_slots.resize(ops_.size());
    v = heap_slots.data();
  }
  const WorldSet all = all_worlds(n);
  const bool classical = language_ == Language::Classical;
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    const Op& op = ops_[i];
    WorldSet out = 0;
    switch (op.kind) {
      case Kind::Atom:
        out = op.a < 0 ? 0 : val[op.a];
        break;
      case Kind::Bottom:
        out = 0;
        break;
      case Kind::And:
        out = v[op.a] & v[op.b];
        break;
      case Kind::Or:
        out = v[op.a] | v[op.b];
        break;
      case Kind::Imp:
        if (classical) {
          out = (~v[op.a] | v[op.b]) & all;
        } else {
          const WorldSet bad = v[op.a] & ~v[op.b];
          for (std::size_t w = 0; w < n; ++w)
            if (!(r[w] & bad)) out |= bit(w);
        }
        break;
      case Kind::Know:
      case Kind::Ver: {
        const WorldSet bad = ~v[op.a];
        for (std::size_t w = 0; w < n; ++w)
          if (!(e[w] & bad)) out |= bit(w);
        break;
      }
      case Kind::Box: {
        const WorldSet bad = ~v[op.a];
        for (std::size_t w = 0; w < n; ++w)
          if (!(r[w] & bad)) out |= bit(w);
        break;
      }
    }
    v[i] = out;
  }
  return v[ops_.size() - 1];
}

WorldSet truth_set(const KripkeModel& m, const Formula& f) {
  return CompiledFormula(f, m.atoms).eval(m);
}

bool forces(const KripkeModel& m, int world_id, const Formula& f) {
  const std::size_t w = m.index_of(world_id);
  return (truth_set(m, f) & bit(w)) != 0;
}

bool holds_in_model(const KripkeModel& m, const Formula& f) { return truth_set(m, f) == m.all(); }

KripkeModel add_root(const KripkeModel& m) {
  if (m.size() + 1 > kMaxWorlds) throw ModelError("add_root: model too large");
  KripkeModel out = m;
  out.ids.push_back(m.ids.empty() ? 1 : *std::max_element(m.ids.begin(), m.ids.end()) + 1);
  const WorldSet all = out.all();
  out.r.push_back(all);
  out.e.push_back(all);
  return out;
}

KripkeModel join_with_root(const KripkeModel& m1, const KripkeModel& m2) {
  if (m1.logic != m2.logic) throw ModelError("join_with_root: models carry different logics");
  const std::size_t n1 = m1.size();
  const std::size_t n2 = m2.size();
  if (n1 + n2 + 1 > kMaxWorlds) throw ModelError("join_with_root: joined model too large");
  KripkeModel out;
  out.logic = m1.logic;
  const int offset = m1.ids.empty() ? 0 : *std::max_element(m1.ids.begin(), m1.ids.end());
  out.ids = m1.ids;
  for (int id : m2.ids) out.ids.push_back(id + offset);
  out.r = m1.r;
  out.e = m1.e;
  for (std::size_t i = 0; i < n2; ++i) {
    out.r.push_back(m2.r[i] << n1);
    out.e.push_back(m2.e[i] << n1);
  }
  std::set<std::string> names(m1.atoms.begin(), m1.atoms.end());
  names.insert(m2.atoms.begin(), m2.atoms.end());
  for (const std::string& a : names) {
    out.atoms.push_back(a);
    out.val.push_back(m1.valuation(a) | (m2.valuation(a) << n1));
  }
  const int max_id = *std::max_element(out.ids.begin(), out.ids.end());
  out.ids.push_back(max_id + 1);
  out.r.push_back(out.all());
  out.e.push_back(out.all());
  return out;
}

KripkeModel builtin_model(std::string_view name) {
  const std::string key = detail::lower(detail::trim(name));
  ModelSpec spec;
  if (key == "m1") {
    spec.logic = Logic::IELMinus;
    spec.worlds = {1};
  } else if (key == "m2") {
    spec.logic = Logic::IEL;
    spec.worlds = {1, 2};
    spec.r = {{1, 2}};
    spec.e = {{1, 2}, {2, 2}};
    spec.val = {{"p", {2}}};
  } else if (key == "m3") {
    spec.logic = Logic::IEL;
    spec.worlds = {1, 2, 3};
    spec.r = {{1, 2}, {1, 3}};
    spec.e = {{1, 2}, {1, 3}, {2, 2}, {3, 3}};
    spec.val = {{"p", {3}}};
  } else if (key == "m4") {
    spec.logic = Logic::IELMinus;
    spec.worlds = {1, 2, 3};
    spec.r = {{1, 2}, {1, 3}};
    spec.e = {{1, 3}};
    spec.val = {{"p", {3}}};
  } else {
    throw ModelError("unknown builtin model '" + std::string(name) + "' (expected M1..M4)");
  }
  return build_model(spec);
}

LoadedModel parse_model(std::string_view text) {
  ModelSpec spec;
  bool have_logic = false;
  bool have_worlds = false;
  for (const detail::Line& line : detail::content_lines(text)) {
    std::string key;
    std::string_view rest;
    if (!detail::split_key(line.text, key, rest)) detail::format_error(line.number, "expected 'key: value'");
    if (key == "logic") {
      try {
        spec.logic = parse_logic(rest);
      } catch (const std::invalid_argument& err) {
        detail::format_error(line.number, err.what());
      }
      have_logic = true;
    } else if (key == "worlds") {
      spec.worlds = detail::parse_world_list(rest, line.number);
      have_worlds = true;
    } else if (key == "r") {
      auto pairs = detail::parse_pairs(rest, line.number);
      spec.r.insert(spec.r.end(), pairs.begin(), pairs.end());
    } else if (key == "e") {
      auto pairs = detail::parse_pairs(rest, line.number);
      spec.e.insert(spec.e.end(), pairs.begin(), pairs.end());
    } else if (key == "val") {
      spec.val.push_back(detail::parse_val(rest, line.number));
    } else {
      detail::format_error(line.number, "unknown section '" + key + "'");
    }
  }
  if (!have_logic) throw ModelError("missing 'logic:' line");
  if (!have_worlds) throw ModelError("missing 'worlds:' line");
  LoadedModel out;
  out.model = build_model(spec, &out.warnings);
  return out;
}

namespace {

void write_relation(std::ostringstream& out, const char* key, const KripkeModel& m,
                    const std::vector<WorldSet>& rel, bool skip_loops) {
  out << key << ":";
  bool first = true;
  for (std::size_t u = 0; u < m.size(); ++u)
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (!(rel[u] & bit(v)) || (skip_loops && u == v)) continue;
      out << (first ? " " : "; ") << m.ids[u] << ' ' << m.ids[v];
      first = false;
    }
  out << '\n';
}

}  // namespace

std::string render_model(const KripkeModel& m) {
  std::ostringstream out;
  out << "logic: " << to_string(m.logic) << '\n';
  out << "worlds:";
  for (int id : m.ids) out << ' ' << id;
  out << '\n';
  write_relation(out, "R", m, m.r, true);
  write_relation(out, "E", m, m.e, false);
  for (std::size_t a = 0; a < m.atoms.size(); ++a) {
    out << "val: " << m.atoms[a] << ':';
    for (int id : ids_of(m, m.val[a])) out << ' ' << id;
    out << '\n';
  }
  return out.str();
}

std::string model_to_dot(const KripkeModel& m) {
  std::ostringstream out;
  out << "digraph model {\n";
  for (std::size_t u = 0; u < m.size(); ++u) {
    out << "  w" << m.ids[u] << " [label=\"" << m.ids[u];
    for (std::size_t a = 0; a < m.atoms.size(); ++a)
      if (m.val[a] & bit(u)) out << "\\n" << m.atoms[a];
    out << "\"];\n";
  }
  for (std::size_t u = 0; u < m.size(); ++u)
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (u != v && (m.r[u] & bit(v))) out << "  w" << m.ids[u] << " -> w" << m.ids[v] << " [label=R];\n";
      if (m.e[u] & bit(v))
        out << "  w" << m.ids[u] << " -> w" << m.ids[v] << " [label=E, style=dotted];\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace iel
