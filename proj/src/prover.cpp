#include "iel/prover.hpp"

#include <algorithm>
#include <bitset>
#include <chrono>
#include <deque>
#include <sstream>
#include <unordered_map>

#include "iel/syntax.hpp"

namespace iel {

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Valid:
      return "valid";
    case VerdictKind::Invalid:
      return "invalid";
    case VerdictKind::Unknown:
      return "unknown";
  }
  return "?";
}

namespace {

constexpr std::size_t kMaxSubformulas = 256;
using Label = std::bitset<kMaxSubformulas>;

struct LabelPairHash {
  std::size_t operator()(const std::pair<Label, Label>& p) const {
    const std::size_t h = std::hash<Label>{}(p.first);
    return h ^ (std::hash<Label>{}(p.second) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};

struct ResourceExhausted {
  std::string reason;
};

constexpr int kSeriality = -1;

struct Demand {
  int formula;  // subformula index signed F, or kSeriality
  std::vector<int> witnesses;
};

struct Node {
  Label label;
  std::vector<Demand> demands;
  bool open = true;
  int closed_by = 0;  // demand formula that failed
  std::size_t closed_round = 0;
};

class Tableau {
 public:
  Tableau(Logic logic, const Formula& f, const SearchConfig& limits)
      : logic_(logic), limits_(limits), start_(std::chrono::steady_clock::now()) {
    subs_ = subformulas(f);
    if (subs_.size() > kMaxSubformulas)
      throw ResourceExhausted{"formula has more than " + std::to_string(kMaxSubformulas) +
                              " distinct subformulas"};
    std::unordered_map<Formula, int> index;
    for (std::size_t i = 0; i < subs_.size(); ++i) {
      const Formula& g = subs_[i];
      kind_.push_back(g.kind());
      int a = -1;
      int b = -1;
      if (g.is_binary()) {
        a = index.at(g.left());
        b = index.at(g.right());
      } else if (g.is_unary()) {
        a = index.at(g.body());
      }
      lhs_.push_back(a);
      rhs_.push_back(b);
      index.emplace(g, static_cast<int>(i));
    }
    top_ = static_cast<int>(subs_.size()) - 1;
  }

  Verdict run(const Formula& f) {
    Label none;
    Label falsify;
    falsify.set(static_cast<std::size_t>(top_));
    roots_ = saturate(none, falsify);
    std::deque<int> work(roots_.begin(), roots_.end());
    while (!work.empty()) {
      const int id = work.front();
      work.pop_front();
      expand(id, work);
    }
    eliminate();

    Verdict verdict;
    std::vector<int> open_roots;
    for (int r : roots_)
      if (nodes_[r].open) open_roots.push_back(r);
    if (open_roots.empty()) {
      verdict.kind = VerdictKind::Valid;
      verdict.certificate = certificate();
      return verdict;
    }
    return extract(f, open_roots);
  }

 private:
  // All saturated labels containing `must_true` and disjoint from
  // `must_false`.
  std::vector<int> saturate(const Label& must_true, const Label& must_false) {
    auto key = std::make_pair(must_true, must_false);
    if (auto it = saturations_.find(key); it != saturations_.end()) return it->second;
    std::vector<int> out;
    Label current;
    fill(0, current, must_true, must_false, out);
    saturations_.emplace(std::move(key), out);
    return out;
  }

  void fill(std::size_t i, Label& current, const Label& must_true, const Label& must_false,
            std::vector<int>& out) {
    if (i == subs_.size()) {
      out.push_back(intern(current));
      return;
    }
    // -1: free choice, 0/1: fixed by the local rules.
    int fixed = -1;
    const int a = lhs_[i];
    const int b = rhs_[i];
    switch (kind_[i]) {
      case Kind::Atom:
        break;
      case Kind::Bottom:
        fixed = 0;
        break;
      case Kind::And:
        fixed = current[a] && current[b];
        break;
      case Kind::Or:
        fixed = current[a] || current[b];
        break;
      case Kind::Imp:
        if (current[a] && !current[b]) {
          fixed = 0;
        } else if (current[b]) {
          fixed = 1;  // persistence of B makes A -> B true
        }
        break;
      case Kind::Know:
        // Co-reflection: A persists into every E-successor.
        if (logic_ != Logic::IntK && current[a]) fixed = 1;
        break;
      default:
        break;
    }
    if (must_true[i]) {
      if (fixed == 0 || must_false[i]) return;
      fixed = 1;
    } else if (must_false[i]) {
      if (fixed == 1) return;
      fixed = 0;
    }
    if (fixed != 0) {
      current.set(i);
      fill(i + 1, current, must_true, must_false, out);
      current.reset(i);
    }
    if (fixed != 1) fill(i + 1, current, must_true, must_false, out);
  }

  int intern(const Label& label) {
    if (auto it = ids_.find(label); it != ids_.end()) return it->second;
    if (nodes_.size() >= limits_.max_labels)
      throw ResourceExhausted{"label limit of " + std::to_string(limits_.max_labels) + " reached"};
    check_time();
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back(Node{label, {}, true, 0, 0});
    ids_.emplace(label, id);
    fresh_.push_back(id);
    return id;
  }

  void check_time() const {
    if (limits_.time_budget && std::chrono::steady_clock::now() - start_ > *limits_.time_budget)
      throw ResourceExhausted{"time budget exhausted"};
  }

  Label knowledge_part(const Label& label) const {
    Label out;
    for (std::size_t i = 0; i < subs_.size(); ++i)
      if (kind_[i] == Kind::Know && label[i]) out.set(static_cast<std::size_t>(lhs_[i]));
    return out;
  }

  void expand(int id, std::deque<int>& work) {
    fresh_.clear();
    const Label label = nodes_[id].label;
    const Label known = knowledge_part(label);
    const Label inherited = logic_ == Logic::IntK ? known : (label | known);
    std::vector<Demand> demands;
    for (std::size_t i = 0; i < subs_.size(); ++i) {
      if (label[i]) continue;
      if (kind_[i] == Kind::Imp) {
        Label t = label;
        t.set(static_cast<std::size_t>(lhs_[i]));
        Label f;
        f.set(static_cast<std::size_t>(rhs_[i]));
        demands.push_back({static_cast<int>(i), saturate(t, f)});
      } else if (kind_[i] == Kind::Know) {
        Label f;
        f.set(static_cast<std::size_t>(lhs_[i]));
        demands.push_back({static_cast<int>(i), saturate(inherited, f)});
      }
    }
    if (logic_ == Logic::IEL) demands.push_back({kSeriality, saturate(inherited, Label{})});
    nodes_[id].demands = std::move(demands);
    for (int fresh : fresh_) work.push_back(fresh);
    fresh_.clear();
  }

  void eliminate() {
    bool changed = true;
    while (changed) {
      changed = false;
      ++rounds_;
      for (Node& node : nodes_) {
        if (!node.open) continue;
        for (const Demand& d : node.demands) {
          const bool met = std::any_of(d.witnesses.begin(), d.witnesses.end(),
                                       [&](int w) { return nodes_[w].open; });
          if (!met) {
            node.open = false;
            node.closed_by = d.formula;
            node.closed_round = rounds_;
            changed = true;
            break;
          }
        }
      }
    }
  }

  std::string describe_demand(int formula) const {
    if (formula == kSeriality) return "E-seriality";
    return "F " + render(subs_[static_cast<std::size_t>(formula)]);
  }

  std::string describe_label(const Label& label) const {
    std::string out = "[";
    bool first = true;
    for (std::size_t i = 0; i < subs_.size(); ++i) {
      const Kind k = kind_[i];
      if (k == Kind::And || k == Kind::Or || k == Kind::Bottom) continue;
      out += first ? "" : ", ";
      out += label[i] ? "T " : "F ";
      out += render(subs_[i]);
      first = false;
    }
    return out + "]";
  }

  Certificate certificate() const {
    Certificate c;
    c.labels = nodes_.size();
    c.root_candidates = roots_.size();
    c.elimination_rounds = rounds_;
    constexpr std::size_t kMaxTrace = 64;
    for (int r : roots_) {
      if (c.trace.size() == kMaxTrace) {
        c.trace.push_back("...");
        break;
      }
      const Node& n = nodes_[r];
      std::ostringstream line;
      line << "root " << describe_label(n.label) << " closed in round " << n.closed_round
           << ": no open successor for " << describe_demand(n.closed_by);
      c.trace.push_back(line.str());
    }
    if (roots_.empty()) c.trace.push_back("no saturated label falsifies the formula");
    return c;
  }

  std::vector<int> select_worlds(int root) const {
    std::vector<int> chosen{root};
    std::unordered_map<int, std::size_t> position{{root, 0}};
    for (std::size_t k = 0; k < chosen.size(); ++k) {
      const Node& node = nodes_[chosen[k]];
      for (const Demand& d : node.demands) {
        int pick = -1;
        for (int w : d.witnesses) {
          if (!nodes_[w].open) continue;
          if (position.count(w)) {
            pick = w;
            break;
          }
          if (pick < 0) pick = w;
        }
        if (!position.count(pick)) {
          position.emplace(pick, chosen.size());
          chosen.push_back(pick);
        }
      }
    }
    return chosen;
  }

  Verdict extract(const Formula& f, const std::vector<int>& open_roots) const {
    Verdict verdict;
    std::vector<int> best;
    constexpr std::size_t kRootsTried = 32;
    for (std::size_t i = 0; i < open_roots.size() && i < kRootsTried; ++i) {
      std::vector<int> worlds = select_worlds(open_roots[i]);
      if (best.empty() || worlds.size() < best.size()) best = std::move(worlds);
    }
    if (best.size() > kMaxWorlds) {
      verdict.reason = "countermodel would need " + std::to_string(best.size()) + " worlds";
      return verdict;
    }

    KripkeModel m;
    m.logic = logic_;
    const std::size_t n = best.size();
    for (std::size_t i = 0; i < n; ++i) m.ids.push_back(static_cast<int>(i) + 1);
    m.r.assign(n, 0);
    m.e.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const Label& li = nodes_[best[i]].label;
      const Label known = knowledge_part(li);
      for (std::size_t j = 0; j < n; ++j) {
        const Label& lj = nodes_[best[j]].label;
        const bool includes = (li & ~lj).none();
        if (includes) m.r[i] |= bit(j);
        if ((known & ~lj).none() && (logic_ == Logic::IntK || includes)) m.e[i] |= bit(j);
      }
    }
    for (std::size_t s = 0; s < subs_.size(); ++s) {
      if (kind_[s] != Kind::Atom) continue;
      WorldSet where = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (nodes_[best[i]].label[s]) where |= bit(i);
      m.atoms.push_back(subs_[s].name());
      m.val.push_back(where);
    }
    std::vector<std::size_t> order(m.atoms.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return m.atoms[x] < m.atoms[y]; });
    KripkeModel sorted = m;
    for (std::size_t i = 0; i < order.size(); ++i) {
      sorted.atoms[i] = m.atoms[order[i]];
      sorted.val[i] = m.val[order[i]];
    }

    if (!validate(sorted, logic_).ok() || forces(sorted, 1, f)) {
      verdict.reason = "extracted countermodel failed its re-check";
      return verdict;
    }
    verdict.kind = VerdictKind::Invalid;
    verdict.countermodel = Countermodel{std::move(sorted), 1};
    return verdict;
  }

  Logic logic_;
  SearchConfig limits_;
  std::chrono::steady_clock::time_point start_;
  std::vector<Formula> subs_;
  std::vector<Kind> kind_;
  std::vector<int> lhs_;
  std::vector<int> rhs_;
  int top_ = 0;
  std::vector<Node> nodes_;
  std::unordered_map<Label, int> ids_;
  std::unordered_map<std::pair<Label, Label>, std::vector<int>, LabelPairHash> saturations_;
  std::vector<int> roots_;
  std::vector<int> fresh_;
  std::size_t rounds_ = 0;
};

}  // namespace

Verdict decide(Logic logic, const Formula& f, const SearchConfig& limits) {
  require_intuitionistic(f, "decide");
  try {
    return Tableau(logic, f, limits).run(f);
  } catch (const ResourceExhausted& e) {
    Verdict v;
    v.reason = e.reason;
    return v;
  }
}

Verdict decide_ipc(const Formula& f, const SearchConfig& limits) {
  if (contains_kind(f, Kind::Know) || !is_intuitionistic(f))
    throw LanguageError("decide_ipc: expected a formula without K, [] or V");
  return decide(Logic::IELMinus, f, limits);
}

}  // namespace iel
