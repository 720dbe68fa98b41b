#include <latsyn/lattice_graph.hpp>

namespace latsyn
{

void check_dim( lattice_dim dim, uint32_t max_side )
{
  if ( dim.rows == 0u || dim.cols == 0u )
  {
    throw limit_error( "lattice dimension must be at least 1x1" );
  }
  if ( dim.rows > max_side || dim.cols > max_side )
  {
    throw limit_error( "lattice dimension " + to_string( dim ) + " exceeds " + std::to_string( max_side ) + "x" + std::to_string( max_side ) );
  }
}

std::string to_string( lattice_dim dim )
{
  return std::to_string( dim.rows ) + "x" + std::to_string( dim.cols );
}

lattice_graph::lattice_graph( lattice_dim dim ) : dim_( dim )
{
  if ( dim.rows == 0u || dim.cols == 0u )
  {
    throw limit_error( "lattice dimension must be at least 1x1" );
  }
  auto const r = dim.rows;
  auto const c = dim.cols;
  auto const src = source();
  auto const dst = destination();

  offsets_.reserve( num_nodes() + 1u );
  offsets_.push_back( 0u );
  for ( uint32_t cell = 0; cell < num_cells(); ++cell )
  {
    auto const i = row( cell );
    auto const j = col( cell );
    bool const middle = i > 0u && i + 1u < r;
    if ( i == 0u )
    {
      adjacency_.push_back( src );
    }
    if ( i > 0u )
    {
      adjacency_.push_back( cell - c );
    }
    if ( middle && j > 0u )
    {
      adjacency_.push_back( cell - 1u );
    }
    if ( middle && j + 1u < c )
    {
      adjacency_.push_back( cell + 1u );
    }
    if ( i + 1u < r )
    {
      adjacency_.push_back( cell + c );
    }
    if ( i + 1u == r )
    {
      adjacency_.push_back( dst );
    }
    offsets_.push_back( static_cast<uint32_t>( adjacency_.size() ) );
  }
  for ( uint32_t j = 0; j < c; ++j )
  {
    adjacency_.push_back( j );
  }
  offsets_.push_back( static_cast<uint32_t>( adjacency_.size() ) );
  for ( uint32_t j = 0; j < c; ++j )
  {
    adjacency_.push_back( ( r - 1u ) * c + j );
  }
  offsets_.push_back( static_cast<uint32_t>( adjacency_.size() ) );
}

std::map<uint32_t, uint32_t> degree_histogram( lattice_dim dim )
{
  lattice_graph const g( dim );
  std::map<uint32_t, uint32_t> hist;
  for ( uint32_t cell = 0; cell < g.num_cells(); ++cell )
  {
    ++hist[static_cast<uint32_t>( g.children( cell ).size() )];
  }
  return hist;
}

} // namespace latsyn
