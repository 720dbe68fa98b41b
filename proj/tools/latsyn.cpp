// Command-line front end: paths, solve, genlib, map, decompose, synth, verify.

#include <latsyn/decomposer.hpp>
#include <latsyn/simd/tt_kernels.hpp>
#include <latsyn/synthesizer.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace latsyn;

namespace
{

/* sysexits-style codes for everything that is not a verdict */
constexpr int exit_usage = 64;
constexpr int exit_data = 65;
constexpr int exit_no_input = 66;
constexpr int exit_software = 70;
constexpr int exit_cant_create = 73;

struct io_failure
{
  int code;
  std::string message;
};

std::string read_input( std::string const& path )
{
  if ( path == "-" )
  {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    throw io_failure{ exit_no_input, "cannot read " + path };
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output( std::string const& path, std::string const& text )
{
  if ( path == "-" )
  {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out( path, std::ios::binary );
  if ( !out || !( out << text ) )
  {
    throw io_failure{ exit_cant_create, "cannot write " + path };
  }
}

void make_directory( std::string const& dir )
{
  std::error_code ec;
  fs::create_directories( dir, ec );
  if ( ec )
  {
    throw io_failure{ exit_cant_create, "cannot create directory " + dir + ": " + ec.message() };
  }
}

sop load_function( std::string const& path )
{
  auto parsed = parse_function( read_input( path ) );
  for ( auto const& w : parsed.warnings )
  {
    std::cerr << path << ": warning: " << w << '\n';
  }
  return parsed.function;
}

int exit_for( map_status s )
{
  switch ( s )
  {
  case map_status::solution:
    return 0;
  case map_status::no_solution:
    return 1;
  case map_status::inconclusive:
    return 2;
  }
  return exit_software;
}

struct budget_options
{
  std::optional<uint64_t> max_orders;
  std::optional<uint64_t> max_placements;
  std::optional<double> time_limit;

  void attach( CLI::App* cmd )
  {
    cmd->add_option( "--max-orders", max_orders, "Examination orders tried after a truncated search" );
    cmd->add_option( "--max-placements", max_placements, "Placements per term and path at one search node" );
    cmd->add_option( "--time-limit", time_limit, "Seconds per mapping call" );
  }

  search_budget resolve() const
  {
    auto b = search_budget::from_environment();
    if ( max_orders )
    {
      b.max_orders = max_orders;
    }
    if ( max_placements )
    {
      b.max_placements_per_term_path = max_placements;
    }
    if ( time_limit )
    {
      b.time_limit_seconds = time_limit;
    }
    return b;
  }
};

lattice_dim to_dim( std::vector<uint32_t> const& v )
{
  lattice_dim const dim{ v.at( 0 ), v.at( 1 ) };
  check_dim( dim );
  return dim;
}

std::string assignment_line( lattice_assignment const& lat, bool pretty )
{
  std::string s = "ASSG";
  for ( std::size_t i = 0; i < lat.codes.size(); ++i )
  {
    s += " v" + std::to_string( i ) + "=" + ( pretty ? to_pretty( lat.codes[i] ) : std::to_string( lat.codes[i].code() ) );
  }
  return s;
}

std::string join( std::vector<uint32_t> const& xs, uint32_t offset = 0u )
{
  std::string s;
  for ( auto const x : xs )
  {
    s += ( s.empty() ? "" : " " ) + std::to_string( x + offset );
  }
  return s;
}

std::string solution_report( mapping_solution const& sol, bool pretty )
{
  std::string s = "SOLUTION FOUND:\n" + assignment_line( sol.assignment, pretty ) + "\n";
  for ( auto const& e : sol.poi )
  {
    s += "POI: " + e.to_string() + "\n";
  }
  s += "ORDER: " + join( sol.order ) + "\n";
  return s;
}

void print_stats( char const* what, map_stats const& st )
{
  std::cerr << what << ": orders " << st.orders << ", nodes " << st.nodes << ", placements " << st.placements
            << ", leaves " << st.leaves << ", " << st.seconds << " s\n";
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Four-terminal switching lattice synthesis" };
  app.require_subcommand( 1 );
  std::string simd = "auto";
  app.add_option( "--simd", simd, "Truth-table kernels: auto, scalar or avx2" )->check( CLI::IsMember( { "auto", "scalar", "avx2" } ) );

  std::vector<uint32_t> dim_values;
  uint32_t jobs = 1u;
  std::string output = "-";
  std::string out_dir;
  bool pretty = false;
  budget_options budget;

  auto* paths_cmd = app.add_subcommand( "paths", "Enumerate the irredundant paths of a lattice" );
  paths_cmd->add_option( "--dim", dim_values, "Rows and columns" )->expected( 2 )->required();
  paths_cmd->add_option( "--jobs", jobs, "Worker threads" )->check( CLI::PositiveNumber );
  paths_cmd->add_option( "-o,--output", output, "Path file ('-' for stdout)" );

  std::string lattice_file;
  std::string function_file;
  bool merge_pairs = false;
  auto* solve_cmd = app.add_subcommand( "solve", "Function realized by a lattice" );
  solve_cmd->add_option( "lattice", lattice_file, "Lattice file" )->required();
  solve_cmd->add_option( "-o,--output", output, "Function file ('-' for stdout)" );
  solve_cmd->add_flag( "--merge-pairs", merge_pairs, "Merge equal-size terms p*x + p*x' once after solving" );
  solve_cmd->add_flag( "--pretty", pretty, "Also print the function with letters on stderr" );

  uint32_t num_vars = 5u;
  uint32_t trials = 1u;
  uint64_t seed = 1u;
  bool paper_style = false;
  auto* genlib_cmd = app.add_subcommand( "genlib", "Random lattices and their functions" );
  genlib_cmd->add_option( "--dim", dim_values, "Rows and columns" )->expected( 2 )->required();
  genlib_cmd->add_option( "--vars", num_vars, "Number of variables" )->check( CLI::Range( 1, 26 ) );
  genlib_cmd->add_option( "--trials", trials, "Number of entries" );
  genlib_cmd->add_option( "--seed", seed, "Base seed; trial i uses seed + i" );
  genlib_cmd->add_option( "--jobs", jobs, "Worker threads" )->check( CLI::PositiveNumber );
  genlib_cmd->add_option( "-o,--output", output, "Library file ('-' for stdout)" );
  genlib_cmd->add_flag( "--paper-style", paper_style, "Human-readable listing instead of the parseable format" );

  std::string paths_file;
  auto* map_cmd = app.add_subcommand( "map", "Map a function onto one lattice" );
  map_cmd->add_option( "function", function_file, "Function file" )->required();
  auto* map_dim = map_cmd->add_option( "--dim", dim_values, "Rows and columns" )->expected( 2 );
  auto* map_paths = map_cmd->add_option( "--paths", paths_file, "Path file instead of --dim" );
  map_dim->excludes( map_paths );
  map_cmd->add_option( "-o,--output", output, "Lattice file for the solution" );
  map_cmd->add_flag( "--pretty", pretty, "Letters instead of codes in the ASSG line" );
  budget.attach( map_cmd );

  auto* decompose_cmd = app.add_subcommand( "decompose", "Split a function over two lattices" );
  decompose_cmd->add_option( "function", function_file, "Function file" )->required();
  decompose_cmd->add_option( "--dim", dim_values, "Rows and columns" )->expected( 2 )->required();
  decompose_cmd->add_option( "--out-dir", out_dir, "Directory for part_a.lat, part_b.lat and manifest.txt" );
  decompose_cmd->add_flag( "--pretty", pretty, "Letters instead of codes in the ASSG lines" );
  budget.attach( decompose_cmd );

  bool verify = false;
  auto* synth_cmd = app.add_subcommand( "synth", "Cover a function with lattices of one size" );
  synth_cmd->add_option( "function", function_file, "Function file" )->required();
  synth_cmd->add_option( "--dim", dim_values, "Rows and columns" )->expected( 2 )->required();
  synth_cmd->add_option( "--out-dir", out_dir, "Plan directory" )->required();
  synth_cmd->add_flag( "--verify", verify, "Expand the plan and check it against the input" );
  budget.attach( synth_cmd );

  auto* verify_cmd = app.add_subcommand( "verify", "Check that a lattice realizes a function" );
  verify_cmd->add_option( "lattice", lattice_file, "Lattice file" )->required();
  verify_cmd->add_option( "function", function_file, "Function file" )->required();

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::ParseError const& e )
  {
    auto const code = app.exit( e );
    return code == 0 ? 0 : exit_usage;
  }

  try
  {
    if ( simd != "auto" )
    {
      auto const backend = simd == "avx2" ? simd::backend::avx2 : simd::backend::scalar;
      if ( !simd::backend_supported( backend ) )
      {
        std::cerr << "error: " << simd << " kernels are not available on this machine\n";
        return exit_usage;
      }
      simd::set_backend( backend );
    }

    if ( *paths_cmd )
    {
      auto const ps = enumerate_paths( to_dim( dim_values ), { jobs } );
      write_output( output, serialize_paths( ps ) );
      std::cerr << "paths: " << ps.paths.size() << ", longest: " << longest_path_len( ps ) << '\n';
      return 0;
    }

    if ( *solve_cmd )
    {
      auto const lat = parse_lattice( read_input( lattice_file ) );
      auto const f = solve_lattice( lat, merge_pairs ? solve_mode::merge_complementary_pairs : solve_mode::exact );
      write_output( output, serialize_function( f ) );
      if ( pretty )
      {
        std::cerr << "f = " << to_pretty( f ) << '\n';
      }
      std::cerr << "product terms: " << f.size() << '\n';
      return 0;
    }

    if ( *genlib_cmd )
    {
      library_params ps;
      ps.dim = to_dim( dim_values );
      ps.num_vars = num_vars;
      ps.trials = trials;
      ps.seed = seed;
      ps.jobs = jobs;
      auto const entries = generate_library( ps );
      write_output( output, paper_style ? serialize_library_paper_style( entries ) : serialize_library( entries, seed ) );
      std::cerr << "entries: " << entries.size() << '\n';
      return 0;
    }

    if ( *map_cmd )
    {
      auto const f = load_function( function_file );
      if ( dim_values.empty() && paths_file.empty() )
      {
        std::cerr << "error: map needs --dim or --paths\n";
        return exit_usage;
      }
      auto const ps = paths_file.empty() ? enumerate_paths( to_dim( dim_values ) ) : parse_paths( read_input( paths_file ) );
      auto const r = map_function( f, ps, budget.resolve() );
      print_stats( "map", r.stats );
      switch ( r.status )
      {
      case map_status::solution:
        std::cout << solution_report( *r.solution, pretty );
        if ( output != "-" )
        {
          write_output( output, serialize_lattice( r.solution->assignment ) );
        }
        break;
      case map_status::no_solution:
        std::cout << "NO SOLUTION\n";
        break;
      case map_status::inconclusive:
        std::cout << "INCONCLUSIVE (budget)\n";
        break;
      }
      return exit_for( r.status );
    }

    if ( *decompose_cmd )
    {
      auto const f = load_function( function_file );
      decompose_params dp;
      dp.budget = budget.resolve();
      auto const r = decompose_two( f, to_dim( dim_values ), dp );
      std::cerr << "decompose: pairs " << r.stats.pairs << ", subsets " << r.stats.subsets << ", map calls "
                << r.stats.map_calls << ", " << r.stats.seconds << " s\n";

      std::string manifest = "status " + to_string( r.status ) + "\n";
      if ( r.result )
      {
        auto const& d = *r.result;
        manifest += "pair " + std::to_string( d.pair.size_a ) + " " + std::to_string( d.pair.size_b ) + "\n";
        for ( auto const* part : { &d.a, &d.b } )
        {
          auto const name = part == &d.a ? std::string( "part_a" ) : std::string( "part_b" );
          manifest += name + " terms " + join( part->terms, 1u ) + "\n";
          manifest += name + " function " + to_pretty( part->function ) + "\n";
          std::istringstream report( solution_report( part->solution, pretty ) );
          for ( std::string line; std::getline( report, line ); )
          {
            manifest += name + " " + line + "\n";
          }
        }
        if ( !out_dir.empty() )
        {
          make_directory( out_dir );
          write_output( ( fs::path( out_dir ) / "part_a.lat" ).string(), serialize_lattice( d.a.solution.assignment ) );
          write_output( ( fs::path( out_dir ) / "part_b.lat" ).string(), serialize_lattice( d.b.solution.assignment ) );
        }
      }
      if ( !out_dir.empty() )
      {
        make_directory( out_dir );
        write_output( ( fs::path( out_dir ) / "manifest.txt" ).string(), manifest );
      }
      std::cout << manifest;
      return exit_for( r.status );
    }

    if ( *synth_cmd )
    {
      auto const f = load_function( function_file );
      synth_params sp;
      sp.budget = budget.resolve();
      auto const r = synthesize( f, to_dim( dim_values ), sp );
      std::cerr << "synth: status " << to_string( r.status ) << ", map calls " << r.stats.map_calls << ", decompositions "
                << r.stats.decompositions << ", " << r.stats.seconds << " s\n";

      auto const& plan = *r.plan;
      make_directory( out_dir );
      std::string manifest = "dim " + std::to_string( plan.dim.rows ) + " " + std::to_string( plan.dim.cols ) + "\n";
      manifest += "status " + to_string( r.status ) + "\n";
      manifest += "lattices " + std::to_string( plan.lattices.size() ) + "\n";
      for ( std::size_t i = 0; i < plan.lattices.size(); ++i )
      {
        auto const& pl = plan.lattices[i];
        auto const name = "lattice_" + std::to_string( i + 1u ) + ".lat";
        write_output( ( fs::path( out_dir ) / name ).string(), serialize_lattice( pl.lattice ) );
        manifest += name + ( pl.defines ? " aux " + std::to_string( pl.defines->code() ) : " terms " + join( pl.terms, 1u ) ) + " : " + to_pretty( pl.function ) + "\n";
      }
      std::string aux;
      for ( auto const& def : plan.aux )
      {
        aux += std::to_string( def.aux.code() ) + " " + std::to_string( def.product.size() );
        for ( auto const l : def.product.literals() )
        {
          aux += " " + std::to_string( l.code() );
        }
        aux += "\n";
      }
      write_output( ( fs::path( out_dir ) / "aux.txt" ).string(), aux );
      write_output( ( fs::path( out_dir ) / "manifest.txt" ).string(), manifest );
      std::cout << manifest;

      if ( verify )
      {
        auto const ok = equivalent( expand_plan( plan ), f );
        std::cout << ( ok ? "EQUIVALENT\n" : "NOT EQUIVALENT\n" );
        if ( !ok )
        {
          return 1;
        }
      }
      return exit_for( r.status );
    }

    if ( *verify_cmd )
    {
      auto const lat = parse_lattice( read_input( lattice_file ) );
      auto const f = load_function( function_file );
      auto const ok = verify_witness( lat, f );
      std::cout << ( ok ? "EQUIVALENT\n" : "NOT EQUIVALENT\n" );
      if ( !ok )
      {
        std::cerr << "lattice: " << to_pretty( solve_lattice( lat ) ) << "\nexpected: " << to_pretty( f ) << '\n';
      }
      return ok ? 0 : 1;
    }
  }
  catch ( io_failure const& e )
  {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  }
  catch ( format_error const& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_data;
  }
  catch ( literal_error const& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_data;
  }
  catch ( limit_error const& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  catch ( std::exception const& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_software;
  }
  return exit_usage;
}
