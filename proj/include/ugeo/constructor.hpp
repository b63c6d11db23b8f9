#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ugeo/errors.hpp"
#include "ugeo/graph.hpp"
#include "ugeo/nimber.hpp"

namespace ugeo {

enum class Role : std::uint8_t {
  N,          // N_i, rank i
  R,          // R_i
  M,          // M_i, the * gadget head
  P,          // P_i, the *2 gadget head
  MPart,      // M_{i,k}^{(a..d)}
  PPart,      // P_{i,k}^{(a..f)}
  Singleton,  // M_i^{(0)} / P_i^{(0)}: the "0" box of the figures
  TreeRoot,   // root of a tree gadget t(v)
  TreeNode,   // non-root vertex of a tree gadget
};

struct Label {
  Role role = Role::TreeNode;
  std::uint32_t rank = 0;   // i
  std::uint32_t other = 0;  // k for parts
  char part = 0;            // 'a'..'f' for parts; 'M'/'P' for singletons
  std::uint32_t tree_value = 0;
  std::string anchor;  // name of the vertex a tree hangs from ("" standalone)

  std::string name() const {
    switch (role) {
      case Role::N: return "N" + std::to_string(rank);
      case Role::R: return "R" + std::to_string(rank);
      case Role::M: return "M" + std::to_string(rank);
      case Role::P: return "P" + std::to_string(rank);
      case Role::MPart:
        return "M" + std::to_string(rank) + "," + std::to_string(other) + part;
      case Role::PPart:
        return "P" + std::to_string(rank) + "," + std::to_string(other) + part;
      case Role::Singleton: return std::string(1, part) + std::to_string(rank) + "^0";
      case Role::TreeRoot:
        return "T" + std::to_string(tree_value) + (anchor.empty() ? "" : "@" + anchor);
      case Role::TreeNode: return "t" + (anchor.empty() ? std::string() : "@" + anchor);
    }
    return "?";
  }
};

struct LabeledConstruction {
  Position position;
  std::vector<Label> labels;  // one per vertex
  std::uint32_t nimber = 0;   // the value the construction targets

  // Vertex carrying a unique label name (tree nodes are not unique).
  std::optional<Vertex> find(std::string_view name) const {
    for (Vertex v = 0; v < labels.size(); ++v)
      if (labels[v].role != Role::TreeNode && labels[v].name() == name) return v;
    return std::nullopt;
  }
  Vertex at(std::string_view name) const {
    auto v = find(name);
    if (!v) throw Error("unknown_label", "no vertex labeled " + std::string(name));
    return *v;
  }

  // {"labels":{"0":"N4",...}}
  std::string labels_json() const {
    std::string out = "{\"labels\":{";
    for (Vertex v = 0; v < labels.size(); ++v) {
      if (v) out += ',';
      out += "\"" + std::to_string(v) + "\":\"" + labels[v].name() + "\"";
    }
    out += "}}";
    return out;
  }
};

namespace detail {

class ConstructionBuilder {
 public:
  Vertex add(Label label) {
    labels_.push_back(std::move(label));
    return gb_.add_vertex();
  }
  void edge(Vertex u, Vertex v) { gb_.add_edge(u, v); }

  // t(k): root with children t(k-1), ..., t(0), preorder numbering. Attached
  // to `anchor_vertex` when given. Returns the root.
  Vertex tree(std::uint32_t k, const std::string& anchor_name,
              std::optional<Vertex> anchor_vertex) {
    Label root_label;
    root_label.role = Role::TreeRoot;
    root_label.tree_value = k;
    root_label.anchor = anchor_name;
    Vertex root = add(root_label);
    if (anchor_vertex) edge(*anchor_vertex, root);
    subtree_children(root, k, anchor_name);
    return root;
  }

  LabeledConstruction finish(Vertex token, std::uint32_t nimber) {
    return LabeledConstruction{make_position(gb_.build(), token), std::move(labels_), nimber};
  }

 private:
  void subtree_children(Vertex parent, std::uint32_t k, const std::string& anchor_name) {
    for (std::uint32_t c = k; c-- > 0;) {
      Label l;
      l.role = Role::TreeNode;
      l.anchor = anchor_name;
      Vertex child = add(l);
      edge(parent, child);
      subtree_children(child, c, anchor_name);
    }
  }

  GraphBuilder gb_;
  std::vector<Label> labels_;
};

inline Label make_label(Role role, std::uint32_t rank, std::uint32_t other = 0, char part = 0) {
  Label l;
  l.role = role;
  l.rank = rank;
  l.other = other;
  l.part = part;
  return l;
}

}  // namespace detail

// t(n): 2^n vertices, token at the root, value *n.
inline LabeledConstruction build_tree_nimber(std::uint32_t n, std::uint32_t cap = 10) {
  if (n > cap)
    throw CapExceeded("tree for *" + std::to_string(n) + " needs 2^" + std::to_string(n) +
                      " vertices; cap is " + std::to_string(cap));
  detail::ConstructionBuilder b;
  Vertex root = b.tree(n, "", std::nullopt);
  return b.finish(root, n);
}

// Position of value *n. n <= 3 is a tree; n >= 4 follows the nimber
// generation algorithm with the figures' N_i-M_i, N_i-P_i and N_4-R_4 edges
// and the *3 tree at N_4.
//
// Numbering: N4, R4; then for each i = 5..n: N_i, M_i, P_i, R_i, M_i^0,
// P_i^0, the *3 tree of N_i, for each j = 4..i-1 the parts P_{i,j}^{(a..f)}
// and M_{i,j}^{(a..d)}, the *2 tree of M_i and the * tree of P_i; finally
// the *, *2, *3 trees of N_4.
inline LabeledConstruction build_nimber_position(std::uint32_t n) {
  if (n <= 3) return build_tree_nimber(n);
  using detail::make_label;
  detail::ConstructionBuilder b;
  std::vector<Vertex> N(n + 1), R(n + 1);
  N[4] = b.add(make_label(Role::N, 4));
  R[4] = b.add(make_label(Role::R, 4));
  b.edge(N[4], R[4]);
  for (std::uint32_t i = 5; i <= n; ++i) {
    const std::string si = std::to_string(i);
    N[i] = b.add(make_label(Role::N, i));
    Vertex M = b.add(make_label(Role::M, i));
    Vertex P = b.add(make_label(Role::P, i));
    R[i] = b.add(make_label(Role::R, i));
    Vertex M0 = b.add(make_label(Role::Singleton, i, 0, 'M'));
    Vertex P0 = b.add(make_label(Role::Singleton, i, 0, 'P'));
    b.edge(N[i], R[i]);
    b.edge(M, M0);
    b.edge(P, P0);
    b.edge(N[i], M);
    b.edge(N[i], P);
    b.tree(3, "N" + si, N[i]);
    for (std::uint32_t j = 4; j < i; ++j) {
      Vertex pa = b.add(make_label(Role::PPart, i, j, 'a'));
      Vertex pb = b.add(make_label(Role::PPart, i, j, 'b'));
      Vertex pc = b.add(make_label(Role::PPart, i, j, 'c'));
      Vertex pd = b.add(make_label(Role::PPart, i, j, 'd'));
      Vertex pe = b.add(make_label(Role::PPart, i, j, 'e'));
      Vertex pf = b.add(make_label(Role::PPart, i, j, 'f'));
      Vertex ma = b.add(make_label(Role::MPart, i, j, 'a'));
      Vertex mb = b.add(make_label(Role::MPart, i, j, 'b'));
      Vertex mc = b.add(make_label(Role::MPart, i, j, 'c'));
      Vertex md = b.add(make_label(Role::MPart, i, j, 'd'));
      b.edge(P, pa);
      b.edge(pa, pb);
      b.edge(pa, pc);
      b.edge(pc, pd);
      b.edge(pc, pe);
      b.edge(pe, pf);
      b.edge(pf, R[j]);
      b.edge(N[i], N[j]);
      b.edge(M, ma);
      b.edge(ma, mb);
      b.edge(ma, mc);
      b.edge(mc, md);
      b.edge(md, R[j]);
    }
    b.tree(2, "M" + si, M);
    b.tree(1, "P" + si, P);
  }
  b.tree(1, "N4", N[4]);
  b.tree(2, "N4", N[4]);
  b.tree(3, "N4", N[4]);
  return b.finish(N[n], n);
}

}  // namespace ugeo
