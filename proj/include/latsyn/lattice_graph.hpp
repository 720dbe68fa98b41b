/*!
  \file lattice_graph.hpp
  \brief Reconfigured four-terminal lattice graph

  Cells are numbered row-major from 0. Two pseudo nodes close the graph:
  the source plate (id r*c) touches every top-row cell and the destination
  plate (id r*c + 1) touches every bottom-row cell. Vertically adjacent
  cells are always connected; horizontally adjacent cells only in the
  middle rows 1..r-2, so no path can run along the top or bottom plate.
*/
#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace latsyn
{

struct lattice_dim
{
  uint32_t rows{ 0 };
  uint32_t cols{ 0 };

  constexpr uint32_t cells() const noexcept { return rows * cols; }
  bool operator==( lattice_dim const& ) const = default;
};

/*! \brief Largest side accepted by path enumeration and the command line. */
inline constexpr uint32_t max_lattice_side = 8u;

/*! \brief Throws `limit_error` unless 1 <= rows, cols <= `max_side`. */
void check_dim( lattice_dim dim, uint32_t max_side = max_lattice_side );

std::string to_string( lattice_dim dim );

class lattice_graph
{
public:
  explicit lattice_graph( lattice_dim dim );

  lattice_dim dim() const noexcept { return dim_; }
  uint32_t num_cells() const noexcept { return dim_.cells(); }
  uint32_t num_nodes() const noexcept { return dim_.cells() + 2u; }
  uint32_t source() const noexcept { return dim_.cells(); }
  uint32_t destination() const noexcept { return dim_.cells() + 1u; }

  /*! \brief Neighbors of `node`: source first, then cells ascending, then destination. */
  std::span<uint32_t const> children( uint32_t node ) const noexcept
  {
    return { adjacency_.data() + offsets_[node], adjacency_.data() + offsets_[node + 1u] };
  }

  uint32_t row( uint32_t cell ) const noexcept { return cell / dim_.cols; }
  uint32_t col( uint32_t cell ) const noexcept { return cell % dim_.cols; }

private:
  lattice_dim dim_;
  std::vector<uint32_t> offsets_;
  std::vector<uint32_t> adjacency_;
};

inline lattice_graph build_children( lattice_dim dim )
{
  return lattice_graph( dim );
}

/*! \brief Histogram of cell child-list lengths (source/destination entries counted). */
std::map<uint32_t, uint32_t> degree_histogram( lattice_dim dim );

} // namespace latsyn
