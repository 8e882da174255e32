#include <stconn_cli/cli.hpp>

#include <stconn/io.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace
{

struct result
{
  int code;
  std::string out;
  std::string err;
};

result run( std::vector<std::string> args )
{
  std::ostringstream out, err;
  int const code = stconn::cli::run( args, out, err );
  return { code, out.str(), err.str() };
}

std::string slurp( fs::path const& p )
{
  std::ifstream f( p, std::ios::binary );
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

class cli : public ::testing::Test
{
protected:
  void SetUp() override
  {
    dir = fs::temp_directory_path() /
          ( std::string( "stconn_cli_" ) + ::testing::UnitTest::GetInstance()->current_test_info()->name() );
    fs::remove_all( dir );
    fs::create_directories( dir );
  }
  void TearDown() override { fs::remove_all( dir ); }

  std::string path( std::string const& name ) const { return ( dir / name ).string(); }

  fs::path dir;
};

} // namespace

TEST_F( cli, build_explicit_then_verify_random )
{
  auto const b = run( { "build", "--mode", "explicit", "--n", "16", "--out", path( "c.mc" ) } );
  ASSERT_EQ( b.code, 0 ) << b.err;
  EXPECT_NE( b.out.find( "depth 29" ), std::string::npos ) << b.out;
  auto const v = run( { "verify", "--circuit", path( "c.mc" ), "--n", "16", "--mode", "random", "--samples",
                        "100000", "--seed", "7" } );
  EXPECT_EQ( v.code, 0 ) << v.out << v.err;
  EXPECT_NE( v.out.find( "checked=100000" ), std::string::npos ) << v.out;
}

TEST_F( cli, family_plane_then_exact_check )
{
  auto const p = run( { "family", "plane", "--n", "4", "--out", path( "f.fam" ) } );
  ASSERT_EQ( p.code, 0 ) << p.err;
  EXPECT_EQ( p.out, "family 4 6 2 4 2\n" );
  auto const c = run( { "family", "check", "--file", path( "f.fam" ), "--mode", "exact" } );
  EXPECT_EQ( c.code, 0 );
  EXPECT_EQ( c.out, "PASS subsets=6\n" );
}

TEST_F( cli, eval_single_edge )
{
  ASSERT_EQ( run( { "build", "--mode", "squaring", "--n", "2", "--out", path( "c.mc" ) } ).code, 0 );
  std::ofstream( path( "g.txt" ) ) << "GRAPH 2\n01\n00\n";
  auto const e = run( { "eval", "--circuit", path( "c.mc" ), "--graph", path( "g.txt" ) } );
  EXPECT_EQ( e.code, 0 ) << e.err;
  EXPECT_EQ( e.out, "1\n" );

  std::ofstream( path( "h.txt" ) ) << "GRAPH 2\n10\n01\n";
  EXPECT_EQ( run( { "eval", "--circuit", path( "c.mc" ), "--graph", path( "h.txt" ) } ).out, "0\n" );
}

TEST_F( cli, usage_errors_exit_2 )
{
  auto const none = run( {} );
  EXPECT_EQ( none.code, 2 );
  EXPECT_NE( none.err.find( "build" ), std::string::npos );
  EXPECT_EQ( run( { "frobnicate" } ).code, 2 );
  EXPECT_EQ( run( { "build", "--mode", "explicit", "--out", path( "x" ) } ).code, 2 );
  EXPECT_EQ( run( { "build", "--mode", "cubic", "--n", "4", "--out", path( "x" ) } ).code, 2 );
  EXPECT_EQ( run( { "build", "--mode", "squaring", "--n", "four", "--out", path( "x" ) } ).code, 2 );
  EXPECT_EQ( run( { "predict", "--mode", "squaring", "--n", "2^2000" } ).code, 2 );
  EXPECT_EQ( run( { "stats", "--circuit", path( "missing.mc" ) } ).code, 2 );

  std::ofstream( path( "bad.mc" ) ) << "MCIRC 1 2\nG AND 1 9\nOUT 6\n";
  auto const bad = run( { "stats", "--circuit", path( "bad.mc" ) } );
  EXPECT_EQ( bad.code, 2 );
  EXPECT_NE( bad.err.find( "error:" ), std::string::npos );
  EXPECT_EQ( run( { "--help" } ).code, 0 );
}

TEST_F( cli, verify_reports_counterexample )
{
  // OUT 0 is the input g_11, which is not reachability
  std::ofstream( path( "wrong.mc" ) ) << "MCIRC 1 2\nOUT 0\n";
  auto const v = run( { "verify", "--circuit", path( "wrong.mc" ), "--n", "2", "--mode", "exhaustive" } );
  EXPECT_EQ( v.code, 1 );
  auto const at = v.out.find( "GRAPH 2\n" );
  ASSERT_NE( at, std::string::npos ) << v.out;
  std::istringstream g( v.out.substr( at ) );
  auto const graph = stconn::read_graph( g );
  EXPECT_NE( graph( 1, 1 ), graph( 1, 2 ) );
}

TEST_F( cli, verify_modes )
{
  ASSERT_EQ( run( { "build", "--mode", "squaring", "--n", "4", "--out", path( "r.mc" ) } ).code, 0 );
  auto const ex = run( { "verify", "--circuit", path( "r.mc" ), "--n", "4", "--mode", "exhaustive" } );
  EXPECT_EQ( ex.code, 0 );
  EXPECT_EQ( ex.out.rfind( "PASS mode=exhaustive checked=65536 ", 0 ), 0u ) << ex.out;

  ASSERT_EQ( run( { "build", "--mode", "squaring", "--n", "12", "--l", "3", "--out", path( "p.mc" ) } ).code, 0 );
  auto const planted =
      run( { "verify", "--circuit", path( "p.mc" ), "--n", "12", "--mode", "planted", "--samples", "2000", "--l", "3" } );
  EXPECT_EQ( planted.code, 0 ) << planted.out;
  // without the promise the length-3 circuit must fail somewhere
  auto const unrestricted =
      run( { "verify", "--circuit", path( "p.mc" ), "--n", "12", "--mode", "planted", "--samples", "2000" } );
  EXPECT_EQ( unrestricted.code, 1 );

  EXPECT_EQ( run( { "verify", "--circuit", path( "p.mc" ), "--n", "11", "--mode", "random" } ).code, 2 );
  EXPECT_EQ( run( { "verify", "--circuit", path( "p.mc" ), "--n", "12", "--mode", "sideways" } ).code, 2 );
}

TEST_F( cli, exhaustive_count_is_exact )
{
  ASSERT_EQ( run( { "build", "--mode", "squaring", "--n", "3", "--out", path( "r.mc" ) } ).code, 0 );
  auto const v = run( { "verify", "--circuit", path( "r.mc" ), "--n", "3", "--mode", "exhaustive" } );
  EXPECT_EQ( v.code, 0 );
  // 2^8 graphs contain 1->3, and 2^6 more reach 3 through 2
  EXPECT_EQ( v.out, "PASS mode=exhaustive checked=512 reachable=320 skipped=0 seed=1\n" );
}

TEST_F( cli, stats_round_trip )
{
  auto const b = run( { "build", "--mode", "exact", "--n", "9", "--l", "5", "--out", path( "e.mc" ) } );
  ASSERT_EQ( b.code, 0 ) << b.err;
  auto const s = run( { "stats", "--circuit", path( "e.mc" ) } );
  ASSERT_EQ( s.code, 0 );
  auto const mc = stconn::load_circuit( path( "e.mc" ) );
  EXPECT_NE( b.out.find( "gates " + std::to_string( mc.num_gates() ) + "\n" ), std::string::npos );
  EXPECT_EQ( s.out, "n 9\ngates " + std::to_string( mc.num_gates() ) + "\noutputs 1\ndepth " +
                        std::to_string( stconn::measure_depth( mc ) ) + "\nvalid yes\n" );
  EXPECT_NE( b.out.find( "depth " + std::to_string( stconn::measure_depth( mc ) ) + "\n" ), std::string::npos );
}

TEST_F( cli, builds_are_byte_identical )
{
  for ( auto const* mode : { "squaring", "explicit", "theorem" } )
  {
    std::vector<std::string> const a = { "build", "--mode", mode, "--n", "16", "--l", "9", "--seed", "3", "--out",
                                         path( "a.mc" ) };
    std::vector<std::string> const b = { "build", "--mode", mode, "--n", "16", "--l", "9", "--seed", "3", "--out",
                                         path( "b.mc" ), "--ledger", path( "a.mc.ledger.csv.2" ) };
    ASSERT_EQ( run( a ).code, 0 ) << mode;
    ASSERT_EQ( run( b ).code, 0 ) << mode;
    EXPECT_EQ( slurp( path( "a.mc" ) ), slurp( path( "b.mc" ) ) ) << mode;
    auto const first = run( a );
    ASSERT_EQ( first.code, 0 );
    auto const csv1 = slurp( path( "a.mc.ledger.csv" ) );
    ASSERT_EQ( run( a ).code, 0 );
    EXPECT_EQ( csv1, slurp( path( "a.mc.ledger.csv" ) ) ) << mode;
    EXPECT_NE( csv1.find( "# tool=stconn\n" ), std::string::npos );
    EXPECT_NE( csv1.find( "# seed=3\n" ), std::string::npos );
    EXPECT_NE( csv1.find( "# command=stconn build --mode " ), std::string::npos );
    EXPECT_NE( csv1.find( "stage,label,predicted,measured\n" ), std::string::npos );
  }
}

TEST_F( cli, theorem_ledger_records_level_seeds )
{
  auto const b = run( { "build", "--mode", "theorem", "--n", "7", "--l", "6", "--seed", "11", "--out", path( "t.mc" ) } );
  ASSERT_EQ( b.code, 0 ) << b.err;
  auto const csv = slurp( path( "t.mc.ledger.csv" ) );
  EXPECT_NE( csv.find( "# levels=1\n" ), std::string::npos ) << csv;
  EXPECT_NE( csv.find( "# level0=family(7,7,14,6,3) seed=" ), std::string::npos ) << csv;
  EXPECT_EQ( run( { "verify", "--circuit", path( "t.mc" ), "--n", "7", "--mode", "planted", "--samples", "4000",
                    "--l", "6" } )
                 .code,
             0 );
}

TEST_F( cli, budget_and_construction_exit_codes )
{
  EXPECT_EQ( run( { "build", "--mode", "squaring", "--n", "64", "--max-gates", "1000", "--out", path( "x.mc" ) } ).code,
             3 );
  EXPECT_FALSE( fs::exists( path( "x.mc" ) ) );

  std::ofstream( path( "r.mc" ) ) << "MCIRC 1 5\nOUT 0\n";
  EXPECT_EQ( run( { "verify", "--circuit", path( "r.mc" ), "--n", "5", "--mode", "exhaustive" } ).code, 3 );

  ASSERT_EQ( run( { "family", "plane", "--n", "64", "--out", path( "p.fam" ) } ).code, 0 );
  EXPECT_EQ( run( { "family", "check", "--file", path( "p.fam" ), "--mode", "exact", "--budget", "1000" } ).code, 3 );
  EXPECT_EQ( run( { "family", "check", "--file", path( "p.fam" ), "--mode", "sampled", "--trials", "2000" } ).code, 0 );

  // far too few elements per set for the covering condition
  EXPECT_EQ( run( { "family", "sample", "--n", "12", "--m", "12", "--s", "1", "--l", "6", "--d", "1", "--attempts",
                    "3", "--out", path( "s.fam" ) } )
                 .code,
             4 );
  auto const ok = run( { "family", "sample", "--n", "12", "--m", "12", "--s", "10", "--l", "6", "--d", "6", "--seed",
                         "1", "--out", path( "s.fam" ) } );
  EXPECT_EQ( ok.code, 0 ) << ok.err;
  EXPECT_NE( ok.out.find( "validated exact" ), std::string::npos );
}

TEST_F( cli, family_check_failure_lists_witness )
{
  std::ofstream( path( "bad.fam" ) ) << "FAMILY 4 2 1 2 1\n1\n1\n";
  auto const c = run( { "family", "check", "--file", path( "bad.fam" ), "--mode", "exact" } );
  EXPECT_EQ( c.code, 1 );
  EXPECT_NE( c.out.find( "FAIL" ), std::string::npos );
  EXPECT_NE( c.out.find( "witness 2" ), std::string::npos ) << c.out;
}

TEST_F( cli, predict_large_n )
{
  auto const p = run( { "predict", "--mode", "explicit", "--n", "2^64" } );
  ASSERT_EQ( p.code, 0 ) << p.err;
  EXPECT_NE( p.out.find( "stage,label,predicted,measured\n" ), std::string::npos );
  EXPECT_NE( p.out.find( "# ratio=" ), std::string::npos );
  EXPECT_EQ( run( { "predict", "--mode", "theorem", "--n", "2^1024" } ).code, 0 );
  auto const sq = run( { "predict", "--mode", "squaring", "--n", "1024" } );
  EXPECT_NE( sq.out.find( "total,total,110," ), std::string::npos ) << sq.out;
}
