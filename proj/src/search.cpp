#include "iel/search.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace iel {

namespace {

class PreorderBuilder {
 public:
  explicit PreorderBuilder(std::size_t n) : n_(n), rows_(n, 0) {}

  std::vector<std::vector<WorldSet>> run() {
    fill(0);
    return std::move(out_);
  }

 private:
  // Rows are chosen in index order; any pair of completed rows must
  // already satisfy transitivity, which prunes most of the space.
  void fill(std::size_t u) {
    if (u == n_) {
      out_.push_back(rows_);
      return;
    }
    const WorldSet others = all_worlds(n_) & ~bit(u);
    WorldSet extra = others;
    while (true) {
      rows_[u] = extra | bit(u);
      if (consistent(u)) fill(u + 1);
      if (extra == 0) break;
      extra = (extra - 1) & others;
    }
  }

  bool consistent(std::size_t u) const {
    for (std::size_t v = 0; v <= u; ++v) {
      if ((rows_[u] & bit(v)) && (rows_[v] & ~rows_[u])) return false;
      if ((rows_[v] & bit(u)) && (rows_[u] & ~rows_[v])) return false;
    }
    return true;
  }

  std::size_t n_;
  std::vector<WorldSet> rows_;
  std::vector<std::vector<WorldSet>> out_;
};

// R-up-closed subsets of the worlds.
std::vector<WorldSet> up_sets(const std::vector<WorldSet>& r) {
  std::vector<WorldSet> out;
  const std::size_t n = r.size();
  const WorldSet all = all_worlds(n);
  for (WorldSet s = 0;; ++s) {
    bool closed = true;
    for (std::size_t u = 0; u < n && closed; ++u)
      if ((s & bit(u)) && (r[u] & ~s)) closed = false;
    if (closed) out.push_back(s);
    if (s == all) break;
  }
  return out;
}

WorldSet reach(const KripkeModel& m, std::size_t from) {
  WorldSet seen = bit(from);
  WorldSet frontier = seen;
  while (frontier) {
    WorldSet next = 0;
    for (std::size_t u = 0; u < m.size(); ++u)
      if (frontier & bit(u)) next |= m.r[u] | m.e[u];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

class ModelEnumerator {
 public:
  ModelEnumerator(Logic logic, std::size_t n, const std::vector<std::string>& atoms,
                  const ModelVisitor& visit, EnumerationOptions options)
      : logic_(logic), n_(n), visit_(visit), options_(options) {
    model_.logic = logic;
    for (std::size_t i = 0; i < n; ++i) model_.ids.push_back(static_cast<int>(i) + 1);
    model_.atoms = atoms;
    std::sort(model_.atoms.begin(), model_.atoms.end());
    model_.atoms.erase(std::unique(model_.atoms.begin(), model_.atoms.end()), model_.atoms.end());
    model_.val.assign(model_.atoms.size(), 0);
    model_.e.assign(n, 0);
  }

  bool run() {
    const WorldSet all = all_worlds(n_);
    for (const auto& r : preorders(n_)) {
      if (options_.rooted_only && logic_ != Logic::IntK && r[0] != all) continue;
      model_.r = r;
      ups_ = up_sets(r);
      if (!fill_e(0)) return false;
    }
    return true;
  }

 private:
  bool fill_e(std::size_t u) {
    if (u == n_) {
      if (options_.rooted_only && logic_ == Logic::IntK && reach(model_, 0) != all_worlds(n_))
        return true;
      return fill_val(0);
    }
    const WorldSet allowed = logic_ == Logic::IntK ? all_worlds(n_) : model_.r[u];
    WorldSet s = allowed;
    while (true) {
      if (!(logic_ == Logic::IEL && s == 0)) {
        model_.e[u] = s;
        if (e_consistent(u) && !fill_e(u + 1)) return false;
      }
      if (s == 0) break;
      s = (s - 1) & allowed;
    }
    return true;
  }

  bool e_consistent(std::size_t u) const {
    for (std::size_t v = 0; v < u; ++v) {
      if ((model_.r[u] & bit(v)) && (model_.e[v] & ~model_.e[u])) return false;
      if ((model_.r[v] & bit(u)) && (model_.e[u] & ~model_.e[v])) return false;
    }
    return true;
  }

  bool fill_val(std::size_t a) {
    if (a == model_.atoms.size()) return visit_(model_);
    for (WorldSet s : ups_) {
      model_.val[a] = s;
      if (!fill_val(a + 1)) return false;
    }
    return true;
  }

  Logic logic_;
  std::size_t n_;
  const ModelVisitor& visit_;
  EnumerationOptions options_;
  KripkeModel model_;
  std::vector<WorldSet> ups_;
};

}  // namespace

const std::vector<std::vector<WorldSet>>& preorders(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::vector<std::vector<WorldSet>>> cache;
  if (n == 0 || n > 8) throw std::invalid_argument("preorders: 1 <= n <= 8");
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, PreorderBuilder(n).run()).first;
  return it->second;
}

bool enumerate_models(Logic logic, std::size_t n, const std::vector<std::string>& atoms,
                      const ModelVisitor& visit, EnumerationOptions options) {
  if (n == 0) throw std::invalid_argument("enumerate_models: n must be at least 1");
  return ModelEnumerator(logic, n, atoms, visit, options).run();
}

std::size_t count_models(Logic logic, std::size_t n, const std::vector<std::string>& atoms,
                         EnumerationOptions options) {
  std::size_t count = 0;
  enumerate_models(
      logic, n, atoms, [&](const KripkeModel&) { return ++count, true; }, options);
  return count;
}

std::optional<Countermodel> find_countermodel(Logic logic, const Formula& f, const SearchConfig& cfg) {
  require_intuitionistic(f, "find_countermodel");
  if (cfg.max_worlds == 0) throw std::invalid_argument("find_countermodel: max_worlds must be at least 1");
  std::vector<std::string> atoms = cfg.atoms ? *cfg.atoms : atoms_of(f);
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  const CompiledFormula query(f, atoms);
  const auto start = std::chrono::steady_clock::now();
  std::size_t visited = 0;
  bool out_of_time = false;

  std::optional<Countermodel> found;
  for (std::size_t n = 1; n <= cfg.max_worlds && !found && !out_of_time; ++n) {
    enumerate_models(
        logic, n, atoms,
        [&](const KripkeModel& m) {
          if (!(query.eval(m) & 1)) {
            found = Countermodel{m, m.ids[0]};
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

}  // namespace iel
