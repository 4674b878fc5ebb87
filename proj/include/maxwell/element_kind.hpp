#pragma once

#include <array>
#include <string>
#include <string_view>

namespace maxwell {

/// Element families. Q4/Q9/T6/T3 are nodal Lagrange elements; the E* kinds
/// are curl-conforming edge elements that share the geometry of the nodal
/// kind with the same node layout (EQ4~Q4, EQ12~Q9, ET8~T6, ET3~T3).
enum class ElementKind { Q4, Q9, T6, T3, EQ4, EQ12, ET8, ET3 };

inline constexpr std::array<ElementKind, 8> kAllKinds = {
    ElementKind::Q4,  ElementKind::Q9,   ElementKind::T6,  ElementKind::T3,
    ElementKind::EQ4, ElementKind::EQ12, ElementKind::ET8, ElementKind::ET3};

struct KindTraits {
  int node_count;      // geometry nodes
  int edge_count;      // edge dofs, 0 for nodal kinds
  int geometry_order;  // 1 = straight sided, 2 = quadratic
  bool is_edge;
  bool is_triangle;
  int side_count;
};

constexpr KindTraits traits(ElementKind k) {
  switch (k) {
    case ElementKind::Q4: return {4, 0, 1, false, false, 4};
    case ElementKind::Q9: return {9, 0, 2, false, false, 4};
    case ElementKind::T6: return {6, 0, 2, false, true, 3};
    case ElementKind::T3: return {3, 0, 1, false, true, 3};
    case ElementKind::EQ4: return {4, 4, 1, true, false, 4};
    case ElementKind::EQ12: return {9, 12, 2, true, false, 4};
    case ElementKind::ET8: return {6, 8, 2, true, true, 3};
    case ElementKind::ET3: return {3, 3, 1, true, true, 3};
  }
  return {0, 0, 0, false, false, 0};
}

/// Nodal kind with the same geometry (identity for nodal kinds).
constexpr ElementKind geometry_kind(ElementKind k) {
  switch (k) {
    case ElementKind::EQ4: return ElementKind::Q4;
    case ElementKind::EQ12: return ElementKind::Q9;
    case ElementKind::ET8: return ElementKind::T6;
    case ElementKind::ET3: return ElementKind::T3;
    default: return k;
  }
}

/// Triangle kind used alongside a quad kind in mixed meshes (and when
/// quads are split). Triangle kinds map to themselves.
constexpr ElementKind triangle_companion(ElementKind k) {
  switch (k) {
    case ElementKind::Q4: return ElementKind::T3;
    case ElementKind::Q9: return ElementKind::T6;
    case ElementKind::EQ4: return ElementKind::ET3;
    case ElementKind::EQ12: return ElementKind::ET8;
    default: return k;
  }
}

std::string_view to_string(ElementKind k);

/// Case-insensitive; accepts "t3geom" as an alias of T3. Throws InputError.
ElementKind parse_kind(std::string_view name);

}  // namespace maxwell
