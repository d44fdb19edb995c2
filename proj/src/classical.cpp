#include "iel/classical.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "text_format.hpp"

namespace iel {

std::string_view to_string(Variant v) { return v == Variant::S4V ? "S4V" : "S4V-"; }

Variant parse_variant(std::string_view text) {
  const std::string s = detail::lower(detail::trim(text));
  if (s == "s4v") return Variant::S4V;
  if (s == "s4v-" || s == "s4vminus" || s == "s4v_minus") return Variant::S4VMinus;
  throw std::invalid_argument("unknown variant '" + std::string(text) + "' (expected S4V or S4V-)");
}

std::size_t ClassicalModel::index_of(int id) const {
  auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) throw ModelError("unknown world " + std::to_string(id));
  return static_cast<std::size_t>(it - ids.begin());
}

namespace {

WorldSet box_reach_to_verifier(const ClassicalModel& m, std::size_t u) {
  WorldSet out = 0;
  for (std::size_t v = 0; v < m.size(); ++v)
    if ((m.rbox[u] & bit(v)) && m.rv[v]) out |= bit(v);
  return out;
}

}  // namespace

ValidationReport validate(const ClassicalModel& m, Variant as) {
  ValidationReport report;
  const std::size_t n = m.size();
  auto add = [&](std::string condition, std::vector<int> witnesses) {
    report.violations.push_back({std::move(condition), std::move(witnesses)});
  };
  if (n == 0) add("non-empty", {});
  if (m.rbox.size() != n || m.rv.size() != n || m.val.size() != m.atoms.size()) {
    add("well-formed", {});
    return report;
  }
  const WorldSet all = all_worlds(n);
  for (std::size_t u = 0; u < n; ++u) {
    if (!(m.rbox[u] & bit(u))) add("Rbox-reflexive", {m.ids[u]});
    if ((m.rbox[u] | m.rv[u]) & ~all) add("world-range", {m.ids[u]});
    for (std::size_t v = 0; v < n; ++v) {
      if ((m.rbox[u] & bit(v)) && (m.rbox[v] & ~m.rbox[u])) add("Rbox-transitive", {m.ids[u], m.ids[v]});
      if ((m.rv[u] & bit(v)) && !(m.rbox[u] & bit(v))) add("Rv-subset-Rbox", {m.ids[u], m.ids[v]});
    }
    if (as == Variant::S4V && box_reach_to_verifier(m, u) == 0) add("consistent-verification", {m.ids[u]});
  }
  return report;
}

WorldSet classical_truth_set(const ClassicalModel& m, const Formula& f) {
  require_bimodal(f, "forces_classical");
  const CompiledFormula c(f, m.atoms, CompiledFormula::Language::Classical);
  return c.eval(m.size(), m.rbox.data(), m.rv.data(), m.val.data());
}

bool forces_classical(const ClassicalModel& m, int world_id, const Formula& f) {
  return classical_truth_set(m, f) & bit(m.index_of(world_id));
}

namespace {

class ClassicalEnumerator {
 public:
  ClassicalEnumerator(Variant variant, std::size_t n, const std::vector<std::string>& atoms,
                      const ClassicalVisitor& visit, EnumerationOptions options)
      : n_(n), visit_(visit), options_(options) {
    model_.variant = variant;
    for (std::size_t i = 0; i < n; ++i) model_.ids.push_back(static_cast<int>(i) + 1);
    model_.atoms = atoms;
    std::sort(model_.atoms.begin(), model_.atoms.end());
    model_.atoms.erase(std::unique(model_.atoms.begin(), model_.atoms.end()), model_.atoms.end());
    model_.val.assign(model_.atoms.size(), 0);
    model_.rv.assign(n, 0);
  }

  bool run() {
    for (const auto& r : preorders(n_)) {
      if (options_.rooted_only && r[0] != all_worlds(n_)) continue;
      model_.rbox = r;
      if (!fill_rv(0)) return false;
    }
    return true;
  }

 private:
  bool fill_rv(std::size_t u) {
    if (u == n_) {
      if (model_.variant == Variant::S4V)
        for (std::size_t w = 0; w < n_; ++w)
          if (box_reach_to_verifier(model_, w) == 0) return true;
      return fill_val(0);
    }
    const WorldSet allowed = model_.rbox[u];
    WorldSet s = allowed;
    while (true) {
      model_.rv[u] = s;
      if (!fill_rv(u + 1)) return false;
      if (s == 0) break;
      s = (s - 1) & allowed;
    }
    return true;
  }

  bool fill_val(std::size_t a) {
    if (a == model_.atoms.size()) return visit_(model_);
    const WorldSet all = all_worlds(n_);
    for (WorldSet s = 0;; ++s) {
      model_.val[a] = s;
      if (!fill_val(a + 1)) return false;
      if (s == all) break;
    }
    return true;
  }

  std::size_t n_;
  const ClassicalVisitor& visit_;
  EnumerationOptions options_;
  ClassicalModel model_;
};

}  // namespace

bool enumerate_classical_models(Variant variant, std::size_t n, const std::vector<std::string>& atoms,
                                const ClassicalVisitor& visit, EnumerationOptions options) {
  if (n == 0) throw std::invalid_argument("enumerate_classical_models: n must be at least 1");
  return ClassicalEnumerator(variant, n, atoms, visit, options).run();
}

std::optional<ClassicalCountermodel> find_classical_countermodel(Variant variant, const Formula& f,
                                                                 const SearchConfig& cfg) {
  require_bimodal(f, "find_classical_countermodel");
  if (cfg.max_worlds == 0) throw std::invalid_argument("find_classical_countermodel: max_worlds must be at least 1");
  std::vector<std::string> atoms = cfg.atoms ? *cfg.atoms : atoms_of(f);
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  const CompiledFormula query(f, atoms, CompiledFormula::Language::Classical);
  const auto start = std::chrono::steady_clock::now();
  std::size_t visited = 0;
  bool out_of_time = false;
  std::optional<ClassicalCountermodel> found;
  for (std::size_t n = 1; n <= cfg.max_worlds && !found && !out_of_time; ++n) {
    enumerate_classical_models(
        variant, n, atoms,
        [&](const ClassicalModel& m) {
          if (!(query.eval(m.size(), m.rbox.data(), m.rv.data(), m.val.data()) & 1)) {
            found = ClassicalCountermodel{m, m.ids[0]};
            return false;
          }
          if (cfg.time_budget && (++visited & 0xfff) == 0 &&
              std::chrono::steady_clock::now() - start > *cfg.time_budget) {
            out_of_time = true;
            return false;
          }
          return true;
        },
        {.rooted_only = true});
  }
  return found;
}

ClassicalModel parse_classical_model(std::string_view text) {
  ClassicalModel m;
  bool have_variant = false;
  bool have_worlds = false;
  std::vector<std::pair<int, int>> rbox;
  std::vector<std::pair<int, int>> rv;
  std::map<std::string, std::vector<int>> val;
  for (const detail::Line& line : detail::content_lines(text)) {
    std::string key;
    std::string_view rest;
    if (!detail::split_key(line.text, key, rest)) detail::format_error(line.number, "expected 'key: value'");
    if (key == "variant") {
      try {
        m.variant = parse_variant(rest);
      } catch (const std::invalid_argument& err) {
        detail::format_error(line.number, err.what());
      }
      have_variant = true;
    } else if (key == "worlds") {
      m.ids = detail::parse_world_list(rest, line.number);
      have_worlds = true;
    } else if (key == "rbox") {
      auto pairs = detail::parse_pairs(rest, line.number);
      rbox.insert(rbox.end(), pairs.begin(), pairs.end());
    } else if (key == "rv") {
      auto pairs = detail::parse_pairs(rest, line.number);
      rv.insert(rv.end(), pairs.begin(), pairs.end());
    } else if (key == "val") {
      auto [atom, worlds] = detail::parse_val(rest, line.number);
      auto& slot = val[atom];
      slot.insert(slot.end(), worlds.begin(), worlds.end());
    } else {
      detail::format_error(line.number, "unknown section '" + key + "'");
    }
  }
  if (!have_variant) throw ModelError("missing 'variant:' line");
  if (!have_worlds) throw ModelError("missing 'worlds:' line");
  if (m.ids.empty()) throw ModelError("a model needs at least one world");
  if (m.ids.size() > kMaxWorlds) throw ModelError("at most " + std::to_string(kMaxWorlds) + " worlds are supported");
  const std::size_t n = m.ids.size();
  m.rbox.assign(n, 0);
  m.rv.assign(n, 0);
  for (auto [u, v] : rbox) m.rbox[m.index_of(u)] |= bit(m.index_of(v));
  for (auto [u, v] : rv) m.rv[m.index_of(u)] |= bit(m.index_of(v));
  for (std::size_t i = 0; i < n; ++i) m.rbox[i] |= bit(i);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (m.rbox[i] & bit(k)) m.rbox[i] |= m.rbox[k];
  for (auto& [atom, worlds] : val) {
    WorldSet s = 0;
    for (int w : worlds) s |= bit(m.index_of(w));
    m.atoms.push_back(atom);
    m.val.push_back(s);
  }
  return m;
}

std::string render_classical_model(const ClassicalModel& m) {
  std::ostringstream out;
  out << "variant: " << to_string(m.variant) << '\n';
  out << "worlds:";
  for (int id : m.ids) out << ' ' << id;
  out << '\n';
  auto relation = [&](const char* key, const std::vector<WorldSet>& rel, bool skip_loops) {
    out << key << ':';
    bool first = true;
    for (std::size_t u = 0; u < m.size(); ++u)
      for (std::size_t v = 0; v < m.size(); ++v) {
        if (!(rel[u] & bit(v)) || (skip_loops && u == v)) continue;
        out << (first ? " " : "; ") << m.ids[u] << ' ' << m.ids[v];
        first = false;
      }
    out << '\n';
  };
  relation("Rbox", m.rbox, true);
  relation("Rv", m.rv, false);
  for (std::size_t a = 0; a < m.atoms.size(); ++a) {
    out << "val: " << m.atoms[a] << ':';
    for (std::size_t u = 0; u < m.size(); ++u)
      if (m.val[a] & bit(u)) out << ' ' << m.ids[u];
    out << '\n';
  }
  return out.str();
}

}  // namespace iel
