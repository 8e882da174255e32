#include <stconn/io.hpp>

#include <stconn/error.hpp>

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace stconn
{

namespace
{

[[noreturn]] void parse_fail( std::string const& what )
{
  throw error( error_kind::parse_error, what );
}

std::uint64_t parse_uint( std::string const& token, std::string const& what )
{
  if ( token.empty() || token.find_first_not_of( "0123456789" ) != std::string::npos )
  {
    parse_fail( "expected a non-negative integer for " + what + ", got '" + token + "'" );
  }
  try
  {
    return std::stoull( token );
  }
  catch ( std::exception const& )
  {
    parse_fail( "integer out of range for " + what );
  }
}

std::vector<std::string> tokens_of( std::string const& line )
{
  std::istringstream ss( line );
  std::vector<std::string> tokens;
  for ( std::string t; ss >> t; )
  {
    tokens.push_back( t );
  }
  return tokens;
}

bool next_nonblank_line( std::istream& is, std::string& line )
{
  while ( std::getline( is, line ) )
  {
    if ( line.find_first_not_of( " \t\r" ) != std::string::npos )
    {
      return true;
    }
  }
  return false;
}

} // namespace

void write_circuit( std::ostream& os, monotone_circuit const& circuit )
{
  os << "MCIRC 1 " << circuit.num_vertices() << '\n';
  for ( auto const& g : circuit.gates() )
  {
    os << "G " << ( g.op == gate_op::and_op ? "AND" : "OR" ) << ' ' << g.left.index << ' ' << g.right.index << '\n';
  }
  os << "OUT";
  for ( auto o : circuit.outputs() )
  {
    os << ' ' << o.index;
  }
  os << '\n';
}

monotone_circuit read_circuit( std::istream& is )
{
  std::string line;
  if ( !next_nonblank_line( is, line ) )
  {
    parse_fail( "empty circuit file" );
  }
  auto header = tokens_of( line );
  if ( header.size() != 3 || header[0] != "MCIRC" || header[1] != "1" )
  {
    parse_fail( "expected header 'MCIRC 1 <n>'" );
  }
  auto const n = parse_uint( header[2], "vertex count" );
  if ( n < 1 || n > 46340 )
  {
    parse_fail( "vertex count out of range" );
  }

  std::vector<gate> gates;
  std::vector<wire_id> outputs;
  bool have_outputs = false;
  auto wire = [&]( std::string const& token ) {
    auto const v = parse_uint( token, "wire id" );
    if ( v > std::numeric_limits<std::uint32_t>::max() )
    {
      parse_fail( "wire id out of range" );
    }
    return wire_id{ static_cast<std::uint32_t>( v ) };
  };
  while ( next_nonblank_line( is, line ) )
  {
    auto t = tokens_of( line );
    if ( have_outputs )
    {
      parse_fail( "content after OUT line" );
    }
    if ( t[0] == "G" )
    {
      if ( t.size() != 4 || ( t[1] != "AND" && t[1] != "OR" ) )
      {
        parse_fail( "malformed gate line '" + line + "'" );
      }
      gates.push_back( { t[1] == "AND" ? gate_op::and_op : gate_op::or_op, wire( t[2] ), wire( t[3] ) } );
    }
    else if ( t[0] == "OUT" )
    {
      for ( std::size_t k = 1; k < t.size(); ++k )
      {
        outputs.push_back( wire( t[k] ) );
      }
      have_outputs = true;
    }
    else
    {
      parse_fail( "unexpected line '" + line + "'" );
    }
  }
  if ( !have_outputs )
  {
    parse_fail( "missing OUT line" );
  }
  auto circuit = monotone_circuit::from_parts( n, std::move( gates ), std::move( outputs ) );
  if ( auto v = validate( circuit ) )
  {
    parse_fail( "invalid circuit: " + v->message );
  }
  return circuit;
}

void write_family( std::ostream& os, covering_family const& family )
{
  auto const& p = family.params();
  os << "FAMILY " << p.n << ' ' << p.m << ' ' << p.s << ' ' << p.l << ' ' << p.d << '\n';
  for ( auto const& set : family.sets() )
  {
    for ( std::size_t k = 0; k < set.size(); ++k )
    {
      os << ( k ? " " : "" ) << set[k];
    }
    os << '\n';
  }
}

covering_family read_family( std::istream& is )
{
  std::string line;
  if ( !next_nonblank_line( is, line ) )
  {
    parse_fail( "empty family file" );
  }
  auto header = tokens_of( line );
  if ( header.size() != 6 || header[0] != "FAMILY" )
  {
    parse_fail( "expected header 'FAMILY <n> <m> <s> <l> <d>'" );
  }
  family_params p{ parse_uint( header[1], "n" ), parse_uint( header[2], "m" ), parse_uint( header[3], "s" ),
                   parse_uint( header[4], "l" ), parse_uint( header[5], "d" ) };
  std::vector<vertex_set> sets;
  /* set lines may be empty, so read exactly m lines */
  for ( std::size_t i = 0; i < p.m; ++i )
  {
    if ( !std::getline( is, line ) )
    {
      parse_fail( "family file ends before all " + std::to_string( p.m ) + " sets" );
    }
    vertex_set set;
    for ( auto const& t : tokens_of( line ) )
    {
      set.push_back( static_cast<std::uint32_t>( parse_uint( t, "set element" ) ) );
    }
    sets.push_back( std::move( set ) );
  }
  if ( next_nonblank_line( is, line ) )
  {
    parse_fail( "family file has more than m sets" );
  }
  try
  {
    return covering_family( p, std::move( sets ) );
  }
  catch ( error const& e )
  {
    parse_fail( std::string( "invalid family: " ) + e.what() );
  }
}

void write_graph( std::ostream& os, adjacency_matrix const& graph )
{
  auto const n = graph.size();
  os << "GRAPH " << n << '\n';
  for ( std::size_t i = 1; i <= n; ++i )
  {
    for ( std::size_t j = 1; j <= n; ++j )
    {
      os << ( graph( i, j ) ? '1' : '0' );
    }
    os << '\n';
  }
}

adjacency_matrix read_graph( std::istream& is )
{
  std::string line;
  if ( !next_nonblank_line( is, line ) )
  {
    parse_fail( "empty graph file" );
  }
  auto header = tokens_of( line );
  if ( header.size() != 2 || header[0] != "GRAPH" )
  {
    parse_fail( "expected header 'GRAPH <n>'" );
  }
  auto const n = parse_uint( header[1], "vertex count" );
  if ( n < 1 || n > 46340 )
  {
    parse_fail( "vertex count out of range" );
  }
  adjacency_matrix graph( n );
  for ( std::size_t i = 1; i <= n; ++i )
  {
    if ( !next_nonblank_line( is, line ) )
    {
      parse_fail( "graph file has fewer than n rows" );
    }
    auto const t = tokens_of( line );
    if ( t.size() != 1 || t[0].size() != n || t[0].find_first_not_of( "01" ) != std::string::npos )
    {
      parse_fail( "graph row " + std::to_string( i ) + " must be " + std::to_string( n ) + " characters in {0,1}" );
    }
    for ( std::size_t j = 1; j <= n; ++j )
    {
      graph.set( i, j, t[0][j - 1] == '1' );
    }
  }
  if ( next_nonblank_line( is, line ) )
  {
    parse_fail( "graph file has more than n rows" );
  }
  return graph;
}

void write_ledger_csv( std::ostream& os, depth_ledger const& ledger, std::span<std::string const> header_lines )
{
  for ( auto const& h : header_lines )
  {
    os << "# " << h << '\n';
  }
  os << "stage,label,predicted,measured\n";
  auto measured = []( std::optional<std::int64_t> const& m ) { return m ? std::to_string( *m ) : std::string{}; };
  for ( std::size_t k = 0; k < ledger.stages.size(); ++k )
  {
    auto const& s = ledger.stages[k];
    os << k << ',' << s.label << ',' << s.predicted << ',' << measured( s.measured ) << '\n';
  }
  os << "total,total," << ledger.total_predicted << ',' << measured( ledger.total_measured ) << '\n';
}

namespace
{

template<typename Fn>
auto with_input( std::filesystem::path const& path, Fn&& fn )
{
  std::ifstream in( path );
  if ( !in )
  {
    parse_fail( "cannot open '" + path.string() + "'" );
  }
  return fn( in );
}

template<typename Fn>
void with_output( std::filesystem::path const& path, Fn&& fn )
{
  std::ofstream out( path, std::ios::binary );
  if ( !out )
  {
    parse_fail( "cannot write '" + path.string() + "'" );
  }
  fn( out );
}

} // namespace

monotone_circuit load_circuit( std::filesystem::path const& path )
{
  return with_input( path, []( std::istream& in ) { return read_circuit( in ); } );
}

void save_circuit( std::filesystem::path const& path, monotone_circuit const& circuit )
{
  with_output( path, [&]( std::ostream& out ) { write_circuit( out, circuit ); } );
}

covering_family load_family( std::filesystem::path const& path )
{
  return with_input( path, []( std::istream& in ) { return read_family( in ); } );
}

void save_family( std::filesystem::path const& path, covering_family const& family )
{
  with_output( path, [&]( std::ostream& out ) { write_family( out, family ); } );
}

adjacency_matrix load_graph( std::filesystem::path const& path )
{
  return with_input( path, []( std::istream& in ) { return read_graph( in ); } );
}

} // namespace stconn
