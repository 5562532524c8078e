#include <doctest.h>

#include "cil/checker.hpp"
#include "cil/errors.hpp"
#include "cil/fuzz.hpp"
#include "cil/proof.hpp"

using namespace cil;

namespace
{

bool intel_nodes_disjoint( const Formula& f )
{
    for ( const auto& g : subformulas( f ) )
        if ( g.is( FormulaKind::IntelPower ) && !g.actor().is_disjoint_from( g.intel() ) )
            return false;
    return true;
}

} // namespace

TEST_CASE( "FuzzConfig defaults and validation" )
{
    FuzzConfig cfg;
    CHECK( cfg.max_states == 5 );
    CHECK( cfg.max_agents == 3 );
    CHECK( cfg.max_actions == 3 );
    CHECK( cfg.max_formula_depth == 3 );
    CHECK( cfg.max_rules == 12 );
    CHECK_NOTHROW( cfg.validate() );
    cfg.max_actions = 0;
    CHECK_THROWS_AS( cfg.validate(), Error );

    auto oracle = FuzzConfig::oracle_defaults();
    CHECK( oracle.trials >= 1000 );
    CHECK( oracle.max_states == 4 );
    CHECK( oracle.max_actions == 2 );
}

TEST_CASE( "derive_seed separates streams" )
{
    CHECK( derive_seed( 1, 0, 0 ) == derive_seed( 1, 0, 0 ) );
    CHECK( derive_seed( 1, 0, 0 ) != derive_seed( 1, 1, 0 ) );
    CHECK( derive_seed( 1, 0, 0 ) != derive_seed( 1, 0, 1 ) );
    CHECK( derive_seed( 1, 0, 0 ) != derive_seed( 2, 0, 0 ) );
}

TEST_CASE( "gen_game" )
{
    FuzzConfig cfg;
    CHECK( gen_game( 42, cfg ) == gen_game( 42, cfg ) );

    bool differs = false;
    for ( std::uint64_t seed = 0; seed < 100; ++seed )
    {
        auto m = gen_game( seed, cfg );
        REQUIRE( validate_model( m ).empty() );
        REQUIRE( m.states.size() <= cfg.max_states );
        REQUIRE( m.agents.size() <= cfg.max_agents );
        REQUIRE( m.actions.size() <= cfg.max_actions );
        REQUIRE( m.rules.size() <= cfg.max_rules );
        differs = differs || !( m == gen_game( 0, cfg ) );
    }
    CHECK( differs );

    cfg.max_states = 1;
    for ( std::uint64_t seed = 0; seed < 20; ++seed )
    {
        auto m = gen_game( seed, cfg );
        REQUIRE( m.states.size() == 1 );
        auto g = Game::compile( m );
        for ( const auto& agent : m.agents )
            REQUIRE( coalition_indist( g, Coalition{ agent } ) == Partition{ m.states } );
    }
}

TEST_CASE( "gen_formula" )
{
    const std::vector< Agent > agents{ "a0", "a1", "a2" };
    const auto& atoms = fuzz_atoms();
    for ( std::uint64_t seed = 0; seed < 50; ++seed )
        CHECK( gen_formula( seed, 0, agents, atoms ).is( FormulaKind::Atom ) );

    CHECK( gen_formula( 7, 3, agents, atoms ) == gen_formula( 7, 3, agents, atoms ) );

    std::size_t intel_nodes = 0;
    for ( std::uint64_t seed = 0; seed < 10000; ++seed )
    {
        auto f = gen_formula( seed, 3, agents, atoms );
        REQUIRE( f.depth() <= 3 );
        REQUIRE( intel_nodes_disjoint( f ) );
        for ( const auto& g : subformulas( f ) )
            if ( g.is( FormulaKind::IntelPower ) )
                ++intel_nodes;
    }
    CHECK( intel_nodes > 1000 );
}

TEST_CASE( "instantiate_axiom" )
{
    FuzzConfig cfg;
    for ( auto id : all_schemas )
        for ( std::uint64_t seed = 0; seed < 200; ++seed )
        {
            auto f = instantiate_axiom( id, seed, cfg );
            REQUIRE_MESSAGE( match_axiom( id, f ), schema_name( id ) << ": " << f.to_string() );
            REQUIRE( f == instantiate_axiom( id, seed, cfg ) );
        }

    auto truth = instantiate_axiom( AxiomSchemaId::Truth, 3, cfg );
    REQUIRE( truth.is( FormulaKind::Implies ) );
    CHECK( truth.lhs().is( FormulaKind::Knows ) );
    CHECK( truth.lhs().body() == truth.rhs() );

    for ( std::uint64_t seed = 0; seed < 50; ++seed )
    {
        auto coop = instantiate_axiom( AxiomSchemaId::Cooperation, seed, cfg );
        auto m = match_axiom( AxiomSchemaId::Cooperation, coop );
        REQUIRE( m );
        const auto& k = m.substitution->coalitions;
        CHECK( k.at( "B" ).is_disjoint_from( k.at( "C" ) ) );
        CHECK( k.at( "B" ).is_disjoint_from( k.at( "D" ) ) );
        CHECK( k.at( "C" ).is_disjoint_from( k.at( "D" ) ) );

        auto none = instantiate_axiom( AxiomSchemaId::NoneToAnalyze, seed, cfg );
        REQUIRE( none.is( FormulaKind::Implies ) );
        CHECK( none.lhs().is( FormulaKind::IntelPower ) );
        CHECK( none.lhs().actor().empty() );
        CHECK( none.rhs().actor().empty() );
        CHECK( none.rhs().intel().empty() );
        CHECK( none.lhs().body() == none.rhs().body() );
    }
}

TEST_CASE( "fuzz_soundness: no trials" )
{
    FuzzConfig cfg;
    cfg.trials = 0;
    auto report = fuzz_soundness( cfg );
    CHECK( report.sound() );
    std::size_t total = 0;
    for ( const auto& [ name, n ] : report.trials_run )
        total += n;
    CHECK( total == 0 );
}

TEST_CASE( "fuzz_soundness: sound checker, small campaign" )
{
    FuzzConfig cfg;
    cfg.trials = 40;
    cfg.seed = 9;
    auto report = fuzz_soundness( cfg );
    CHECK( report.sound() );
    REQUIRE( report.trials_run.size() == 9 );
    for ( const auto& [ name, n ] : report.trials_run )
        CHECK( n == cfg.trials * cfg.instances_per_schema );
    CHECK( report.rule_checks.at( "necK" ) > 0 );
    CHECK( report.rule_checks.at( "necS" ) > 0 );
    CHECK( report.rule_checks.at( "mp" ) > 0 );

    auto json = fuzz_report_to_json( cfg, report );
    CHECK( json[ "sound" ] == true );
}

TEST_CASE( "fuzz_soundness: a checker that ignores actor uncertainty is caught" )
{
    FuzzConfig cfg;
    cfg.trials = 200;
    cfg.check.ignore_actor_uncertainty = true;
    auto report = fuzz_soundness( cfg );
    REQUIRE_FALSE( report.sound() );
    std::size_t introspection = 0;
    for ( const auto& v : report.violations )
    {
        if ( v.schema == "StrategicIntrospection" )
            ++introspection;
        // Every violation is a real one for the broken checker.
        auto g = Game::compile( v.model );
        Checker broken( g, cfg.check );
        CHECK_FALSE( broken.satisfies( v.state, v.formula ) );
    }
    CHECK( introspection > 0 );
    CHECK( std::is_sorted( report.violations.begin(), report.violations.end(),
                           []( const Violation& a, const Violation& b ) {
                               return std::tie( a.seed, a.trial ) < std::tie( b.seed, b.trial );
                           } ) );

    // Rerunning the reported trial alone reproduces the same violations.
    const auto& first = report.violations.front();
    auto again = fuzz_trial( cfg, first.trial );
    REQUIRE_FALSE( again.violations.empty() );
    CHECK( again.violations.front().model == first.model );
    CHECK( again.violations.front().formula == first.formula );
    CHECK( again.violations.front().state == first.state );
}

TEST_CASE( "fuzz_trial is independent of the other trials" )
{
    FuzzConfig cfg;
    cfg.trials = 12;
    auto whole = fuzz_soundness( cfg );
    FuzzReport pieced;
    for ( std::size_t t = cfg.trials; t-- > 0; )
        pieced.merge( fuzz_trial( cfg, t ) );
    CHECK( pieced.trials_run == whole.trials_run );
    CHECK( pieced.rule_checks == whole.rule_checks );
    CHECK( pieced.violations.size() == whole.violations.size() );
}

TEST_CASE( "oracle_diff: small campaign agrees" )
{
    auto cfg = FuzzConfig::oracle_defaults();
    cfg.trials = 200;
    auto report = oracle_diff( cfg );
    CHECK( report.instances == 200 );
    CHECK( report.discrepancies.empty() );
    CHECK( report.holding > 0 );
    CHECK( report.holding < report.instances );
    auto json = oracle_report_to_json( cfg, report );
    CHECK( json[ "discrepancies" ].empty() );
}
