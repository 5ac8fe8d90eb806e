#include "central/trees.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "central/error.hpp"
#include "central/text.hpp"

namespace central {

namespace {

void insert_sorted(std::vector<Value>& v, Value x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) v.insert(it, x);
}

// P ← P ∪ P·x ∪ {x}, the one-step update of a finite-product set.
void extend_products(const Ambient& carrier, std::vector<Value>& p, Value x) {
  std::vector<Value> next = p;
  for (Value q : p) insert_sorted(next, carrier(q, x));
  insert_sorted(next, x);
  p = std::move(next);
}

bool contains_sorted(const std::vector<Value>& v, Value x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

std::string to_string(const Node& f) {
  std::string out = "(";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(f[i]);
  }
  return out + ")";
}

FiniteTree::FiniteTree(Ambient carrier, std::set<Node> nodes)
    : carrier_(std::move(carrier)), nodes_(std::move(nodes)) {
  if (!nodes_.count(Node{})) {
    throw InvariantViolation("root", "tree lacks the empty sequence");
  }
  for (const auto& f : nodes_) {
    for (Value x : f) {
      if (!carrier_.is_element(x)) {
        throw ElementOutOfRange("entry " + std::to_string(x) + " of node " +
                                to_string(f) + " not in " + carrier_.name());
      }
    }
    children_[f];
    if (f.empty()) continue;
    Node parent(f.begin(), f.end() - 1);
    if (!nodes_.count(parent)) {
      throw InvariantViolation("prefix-closed",
                               "node " + to_string(f) + " has no parent in the tree");
    }
    depth_ = std::max(depth_, f.size());
  }
  // std::set iterates lexicographically, so each child list comes out sorted.
  for (const auto& f : nodes_) {
    if (f.empty()) continue;
    children_[Node(f.begin(), f.end() - 1)].push_back(f.back());
  }
}

const std::vector<Value>& FiniteTree::branch(const Node& f) const {
  auto it = children_.find(f);
  if (it == children_.end()) throw NodeNotInTree("node " + to_string(f) + " not in tree");
  return it->second;
}

std::vector<Value> finite_products(const Ambient& carrier, const Node& f,
                                   std::size_t from) {
  std::vector<Value> p;
  for (std::size_t i = from; i < f.size(); ++i) extend_products(carrier, p, f[i]);
  return p;
}

BranchProducts branch_and_products(const FiniteTree& t, const Node& f,
                                   const std::optional<Node>& g) {
  BranchProducts out;
  out.branch = t.branch(f);
  out.products = finite_products(t.carrier(), f);
  if (g) {
    if (!t.contains(*g)) throw NodeNotInTree("node " + to_string(*g) + " not in tree");
    if (g->size() <= f.size() || !std::equal(f.begin(), f.end(), g->begin())) {
      throw NotAnExtension(to_string(*g) + " does not properly extend " + to_string(f));
    }
    out.tail_products = finite_products(t.carrier(), *g, f.size());
  }
  return out;
}

TreeClassification classify_tree(const FiniteTree& t) {
  TreeClassification out;
  const Ambient& s = t.carrier();
  out.pruned_to_depth = t.depth();
  for (const auto& f : t.nodes()) {
    const auto& bf = t.branch(f);
    if (bf.empty()) out.pruned_to_depth = std::min(out.pruned_to_depth, f.size());

    if (out.is_star_tree) {
      for (Value x : bf) {
        Node fx = f;
        fx.push_back(x);
        for (Value y : t.branch(fx)) {
          const Value xy = s(x, y);
          if (!contains_sorted(bf, xy)) {
            out.is_star_tree = false;
            out.star_failure = StarFailure{f, x, y, xy};
            break;
          }
        }
        if (!out.is_star_tree) break;
      }
    }

    if (out.is_fp_tree && f.size() < t.depth()) {
      // ⋃ P_{g−f} over proper extensions g, accumulated along each path.
      std::vector<Value> reach;
      std::function<void(Node&, const std::vector<Value>&)> walk =
          [&](Node& g, const std::vector<Value>& p) {
            for (Value x : t.branch(g)) {
              auto q = p;
              extend_products(s, q, x);
              for (Value v : q) insert_sorted(reach, v);
              g.push_back(x);
              walk(g, q);
              g.pop_back();
            }
          };
      Node g = f;
      walk(g, {});
      std::vector<Value> only_branch, only_reach;
      std::set_difference(bf.begin(), bf.end(), reach.begin(), reach.end(),
                          std::back_inserter(only_branch));
      std::set_difference(reach.begin(), reach.end(), bf.begin(), bf.end(),
                          std::back_inserter(only_reach));
      if (!only_branch.empty() || !only_reach.empty()) {
        out.is_fp_tree = false;
        const bool branch_first =
            !only_branch.empty() &&
            (only_reach.empty() || only_branch.front() < only_reach.front());
        out.fp_failure = FpFailure{
            f, branch_first ? only_branch.front() : only_reach.front(),
            branch_first};
      }
    }
  }
  return out;
}

FiniteTree build_fp_tree(const Ambient& carrier, const std::vector<Value>& a,
                         std::size_t depth, std::size_t node_cap) {
  std::vector<Value> members(a);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (Value x : members) {
    if (!carrier.is_element(x)) {
      throw ElementOutOfRange(std::to_string(x) + " not in " + carrier.name());
    }
  }
  auto in_a = [&](Value x) { return contains_sorted(members, x); };
  auto times = [&](Value p, Value x) -> std::optional<Value> {
    try {
      return carrier(p, x);
    } catch (const Overflow&) {
      return std::nullopt;
    }
  };

  std::set<Node> nodes{Node{}};
  std::function<void(Node&, const std::vector<Value>&)> grow =
      [&](Node& f, const std::vector<Value>& pf) {
        if (f.size() >= depth) return;
        for (Value x : members) {
          bool ok = true;
          for (Value p : pf) {
            auto px = times(p, x);
            if (!px || !in_a(*px)) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          f.push_back(x);
          nodes.insert(f);
          if (nodes.size() > node_cap) {
            throw TooLarge("FP-tree exceeds " + std::to_string(node_cap) + " nodes");
          }
          // Every p·x was computed above without overflow.
          std::vector<Value> next = pf;
          for (Value p : pf) insert_sorted(next, *times(p, x));
          insert_sorted(next, x);
          grow(f, next);
          f.pop_back();
        }
      };
  Node root;
  grow(root, {});
  return FiniteTree(carrier, std::move(nodes));
}

std::string to_tree_text(const FiniteTree& t, const std::string& carrier_ref) {
  std::ostringstream out;
  out << "carrier " << carrier_ref << '\n';
  for (const auto& f : t.nodes()) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) out << ' ';
      out << f[i];
    }
    out << '\n';
  }
  return out.str();
}

FiniteTree parse_tree(std::string_view source, const std::filesystem::path& base) {
  auto lines = text::split_lines(source);
  if (lines.empty()) throw ParseError(1, 1, "missing 'carrier' header");
  auto head = text::split_tokens(lines[0].text);
  if (head.size() != 2 || head[0].text != "carrier") {
    throw ParseError(1, 1, "expected 'carrier <cayley file | additive | multiplicative>'");
  }
  const std::string ref(head[1].text);
  Ambient carrier = ref == "additive"         ? Ambient::additive()
                    : ref == "multiplicative" ? Ambient::multiplicative()
                    : Ambient::finite(read_cayley_file(
                          std::filesystem::path(ref).is_absolute() ? std::filesystem::path(ref)
                                                                   : base / ref));
  std::set<Node> nodes;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    Node f;
    for (const auto& token : text::split_tokens(lines[i].text)) {
      f.push_back(text::to_integer(token, lines[i].number));
    }
    nodes.insert(std::move(f));
  }
  return FiniteTree(std::move(carrier), std::move(nodes));
}

FiniteTree read_tree_file(const std::filesystem::path& path) {
  return parse_tree(text::read_file(path), path.parent_path());
}

}  // namespace central
