#include "oreslice/thompson.hpp"

#include <algorithm>
#include <vector>

#include "oreslice/error.hpp"

namespace oreslice {

  namespace {
    // Position one past the subtree that starts at `pos`.
    std::size_t subtree_end(std::string_view s, std::size_t pos) {
      std::size_t need = 1;
      while (need != 0) {
        if (pos >= s.size()) {
          throw Error("truncated tree string");
        }
        need = s[pos] == 'C' ? need + 1 : need - 1;
        ++pos;
      }
      return pos;
    }

    void tree_union(std::string_view a,
                    std::size_t&     pa,
                    std::string_view b,
                    std::size_t&     pb,
                    std::string&     out) {
      if (a[pa] == 'L') {
        auto const end = subtree_end(b, pb);
        out.append(b.substr(pb, end - pb));
        pb = end;
        ++pa;
      } else if (b[pb] == 'L') {
        auto const end = subtree_end(a, pa);
        out.append(a.substr(pa, end - pa));
        pa = end;
        ++pb;
      } else {
        out += 'C';
        ++pa;
        ++pb;
        tree_union(a, pa, b, pb, out);
        tree_union(a, pa, b, pb, out);
      }
    }

    std::string tree_union(std::string_view a, std::string_view b) {
      std::string out;
      std::size_t pa = 0, pb = 0;
      tree_union(a, pa, b, pb, out);
      return out;
    }

    // For each leaf of `tree`, the subtree of `refined` hanging where that
    // leaf sits. `refined` must contain `tree` as a rooted subtree.
    void leaf_subtrees(std::string_view          tree,
                       std::size_t&              pt,
                       std::string_view          refined,
                       std::size_t&              pr,
                       std::vector<std::string>& out) {
      if (tree[pt] == 'L') {
        auto const end = subtree_end(refined, pr);
        out.emplace_back(refined.substr(pr, end - pr));
        pr = end;
        ++pt;
        return;
      }
      ++pt;
      ++pr;
      leaf_subtrees(tree, pt, refined, pr, out);
      leaf_subtrees(tree, pt, refined, pr, out);
    }

    std::vector<std::string> leaf_subtrees(std::string_view tree,
                                           std::string_view refined) {
      std::vector<std::string> out;
      std::size_t              pt = 0, pr = 0;
      leaf_subtrees(tree, pt, refined, pr, out);
      return out;
    }

    std::string substitute_leaves(std::string_view                tree,
                                  std::vector<std::string> const& subtrees) {
      std::string out;
      std::size_t leaf = 0;
      for (char c : tree) {
        if (c == 'L') {
          out += subtrees[leaf++];
        } else {
          out += c;
        }
      }
      return out;
    }

    // Leaf indices i such that leaves i and i+1 hang from a common caret.
    std::vector<std::size_t> exposed_carets(std::string_view s) {
      std::vector<std::size_t> out;
      std::size_t              leaves = 0;
      for (std::size_t p = 0; p < s.size(); ++p) {
        if (s.substr(p, 3) == "CLL") {
          out.push_back(leaves);
        }
        if (s[p] == 'L') {
          ++leaves;
        }
      }
      return out;
    }

    // Replaces the caret over leaves i, i+1 with a single leaf.
    std::string collapse_caret(std::string_view s, std::size_t i) {
      std::size_t leaves = 0;
      for (std::size_t p = 0; p < s.size(); ++p) {
        if (leaves == i && s.substr(p, 3) == "CLL") {
          return std::string(s.substr(0, p)) + "L"
                 + std::string(s.substr(p + 3));
        }
        if (s[p] == 'L') {
          ++leaves;
        }
      }
      throw VerificationError("no caret to collapse");
    }
  }  // namespace

  bool is_tree(std::string_view preorder) {
    if (preorder.empty()
        || preorder.find_first_not_of("CL") != std::string_view::npos) {
      return false;
    }
    std::size_t need = 1;
    for (std::size_t p = 0; p < preorder.size(); ++p) {
      if (need == 0) {
        return false;
      }
      need = preorder[p] == 'C' ? need + 1 : need - 1;
    }
    return need == 0;
  }

  std::size_t leaf_count(std::string_view preorder) {
    return static_cast<std::size_t>(
        std::count(preorder.begin(), preorder.end(), 'L'));
  }

  TreePair f_identity() {
    return TreePair{"L", "L"};
  }

  TreePair f_from_generator(std::size_t i) {
    std::string spine;
    for (std::size_t k = 0; k < i; ++k) {
      spine += "CL";
    }
    return TreePair{spine + "CCLLL", spine + "CLCLL"};
  }

  TreePair f_reduce(TreePair const& x) {
    TreePair r = x;
    while (true) {
      auto const d = exposed_carets(r.domain);
      auto const g = exposed_carets(r.range);
      auto const it
          = std::find_first_of(d.begin(), d.end(), g.begin(), g.end());
      if (it == d.end()) {
        return r;
      }
      r.domain = collapse_caret(r.domain, *it);
      r.range  = collapse_caret(r.range, *it);
    }
  }

  TreePair f_multiply(TreePair const& x, TreePair const& y) {
    auto const common = tree_union(x.range, y.domain);
    TreePair   r{substitute_leaves(x.domain, leaf_subtrees(x.range, common)),
               substitute_leaves(y.range, leaf_subtrees(y.domain, common))};
    return f_reduce(r);
  }

  TreePair f_inverse(TreePair const& x) {
    return TreePair{x.range, x.domain};
  }

  bool f_is_identity(TreePair const& x) {
    return f_reduce(x) == f_identity();
  }

  TreePair f_from_word(Word const& w) {
    TreePair acc = f_identity();
    for (auto const& l : w.letters) {
      if (l.gen.name != "x") {
        throw Error("Thompson words use the generators x0, x1, ...");
      }
      auto g = f_from_generator(l.gen.index);
      acc    = f_multiply(acc, l.exponent > 0 ? g : f_inverse(g));
    }
    return acc;
  }

  std::string print_tree_pair(TreePair const& x) {
    return "(" + x.domain + "," + x.range + ")";
  }

  TreePair parse_tree_pair(std::string_view text) {
    auto const comma = text.find(',');
    if (text.size() < 5 || text.front() != '(' || text.back() != ')'
        || comma == std::string_view::npos) {
      throw ParseError("expected (DOMAIN,RANGE)", 0);
    }
    TreePair x{std::string(text.substr(1, comma - 1)),
               std::string(text.substr(comma + 1, text.size() - comma - 2))};
    if (!is_tree(x.domain) || !is_tree(x.range)
        || leaf_count(x.domain) != leaf_count(x.range)) {
      throw Error("malformed tree pair '" + std::string(text) + "'");
    }
    if (f_reduce(x) != x) {
      throw Error("tree pair '" + std::string(text) + "' is not reduced");
    }
    return x;
  }

  ThompsonBackend::ThompsonBackend() : _alphabet(Alphabet::indexed()) {}

  Element ThompsonBackend::from_word(Word const& w) const {
    return f_from_word(w);
  }

  Element ThompsonBackend::multiply(Element const& x, Element const& y) const {
    return f_multiply(std::get<TreePair>(x), std::get<TreePair>(y));
  }

  Element ThompsonBackend::identity() const {
    return f_identity();
  }

  std::string ThompsonBackend::key(Element const& x) const {
    return print_tree_pair(std::get<TreePair>(x));
  }

  Element ThompsonBackend::from_key(std::string_view key) const {
    return parse_tree_pair(key);
  }

  Element ThompsonBackend::inverse(Element const& x) const {
    return f_inverse(std::get<TreePair>(x));
  }

}  // namespace oreslice
