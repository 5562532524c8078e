// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include "cil/checker.hpp"
#include "cil/fuzz.hpp"
#include "cil/naive_check.hpp"
#include "cil/parser.hpp"
#include "cil/proof.hpp"
#include "cil/proof_script.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>

using namespace cil;
using namespace cil::test;

namespace
{

struct Outcome
{
    bool pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since( Clock::time_point start )
{
    return std::chrono::duration< double >( Clock::now() - start ).count();
}

Outcome atlantic_facts()
{
    auto start = Clock::now();
    auto game = Game::compile( atlantic_model() );
    Checker checker( game );
    bool with_russians = checker.satisfies( "1", parse_formula( "[British,Russians]{Germans} saved" ) );
    bool british_alone = checker.satisfies( "1", parse_formula( "[British]{Germans} saved" ) );
    double t = seconds_since( start );
    std::ostringstream detail;
    detail << std::boolalpha << "[British,Russians]{Germans} saved=" << with_russians
           << ", [British]{Germans} saved=" << british_alone << ", " << t << " s (limit 1 s)";
    return { with_russians && !british_alone && t < 1.0, detail.str() };
}

Outcome wildcard_expansion()
{
    auto model = atlantic_model();
    auto game = Game::compile( model );
    std::set< std::string > triples;
    std::size_t found = 0;
    for ( const auto& guard : { ActionAssignment{ { "British", "2" }, { "Germans", "3" } },
                                ActionAssignment{ { "British", "3" }, { "Germans", "2" } } } )
    {
        TransitionRule wanted{ "1", guard, "s" };
        if ( std::find( model.rules.begin(), model.rules.end(), wanted ) == model.rules.end() )
            continue;
        ++found;
        for ( const auto& s : successors( game, "1", guard ) )
        {
            if ( s.to != wanted.to )
                continue;
            triples.insert( s.profile.at( "British" ) + s.profile.at( "Germans" ) + s.profile.at( "Russians" ) );
        }
    }
    const std::set< std::string > expected{ "231", "232", "233", "321", "322", "323" };
    std::ostringstream detail;
    detail << found << "/2 rules present, triples {";
    for ( const auto& t : triples )
        detail << ( t == *triples.begin() ? "" : "," ) << "(1," << t << ",s)";
    detail << "}";
    return { found == 2 && triples == expected, detail.str() };
}

Outcome oracle_equivalence()
{
    auto start = Clock::now();
    auto cfg = FuzzConfig::oracle_defaults();
    auto report = oracle_diff( cfg );

    auto model = atlantic_model();
    auto game = Game::compile( model );
    Checker checker( game );
    std::size_t fixture_cases = 0;
    std::size_t fixture_mismatches = 0;
    for ( const auto& text : atlantic_suite() )
    {
        auto f = parse_formula( text );
        for ( const auto& w : model.states )
        {
            ++fixture_cases;
            if ( checker.satisfies( w, f ) != naive_check( model, w, f ) )
                ++fixture_mismatches;
        }
    }
    double t = seconds_since( start );
    std::ostringstream detail;
    detail << report.instances << " random instances (" << report.holding << " holding), "
           << report.discrepancies.size() << " discrepancies; Atlantic " << fixture_cases << " cases, "
           << fixture_mismatches << " discrepancies; " << t << " s (limit 60 s)";
    bool pass = report.instances >= 1000 && report.discrepancies.empty() && atlantic_suite().size() >= 20
                && fixture_mismatches == 0 && t < 60.0;
    return { pass, detail.str() };
}

Outcome proof_kernel()
{
    std::ostringstream detail;
    bool pass = true;
    for ( const auto* name : { "lemma_subscript_monotonicity.proof", "lemma_positive_introspection.proof" } )
    {
        auto script = load_proof_script( fixture( name ) );
        bool accepted = check_proof( script ).ok;
        auto mutants = single_line_mutants( script );
        std::size_t rejected = 0;
        for ( const auto& m : mutants )
            if ( !check_proof( m.script ).ok )
                ++rejected;
        detail << ( detail.tellp() > 0 ? "; " : "" ) << name << ": " << ( accepted ? "accepted" : "REJECTED" ) << ", "
               << rejected << "/" << mutants.size() << " mutants rejected";
        pass = pass && accepted && mutants.size() >= 20 && rejected == mutants.size();
    }
    return { pass, detail.str() };
}

Outcome soundness_fuzz()
{
    auto start = Clock::now();
    FuzzConfig cfg;
    auto report = fuzz_soundness( cfg );
    double t = seconds_since( start );

    bool coverage = report.trials_run.size() == all_schemas.size();
    for ( const auto& [ schema, n ] : report.trials_run )
        coverage = coverage && n == cfg.trials * cfg.instances_per_schema;
    std::size_t nec = report.rule_checks.count( "necK" ) ? report.rule_checks.at( "necK" ) : 0;
    std::size_t necs = report.rule_checks.count( "necS" ) ? report.rule_checks.at( "necS" ) : 0;

    std::ostringstream detail;
    detail << cfg.trials << " games x " << report.trials_run.size() << " schemas x " << cfg.instances_per_schema
           << " instances, necK " << nec << ", necS " << necs << " preservation checks, "
           << report.violations.size() << " violations; " << t << " s (limit 300 s)";
    return { coverage && cfg.trials >= 200 && nec > 0 && necs > 0 && report.sound() && t < 300.0, detail.str() };
}

// Draws random (game, state, actor, intel, body) until `target` instances
// satisfy the premise, and counts those where the conclusion fails.
struct PropertyRun
{
    std::size_t instances = 0;
    std::size_t counterexamples = 0;
};

using Conclusion = std::function< Formula( Rng&, const std::vector< Agent >&, const Coalition&, const Coalition&,
                                           const Formula& ) >;

PropertyRun run_property( std::uint64_t purpose, std::size_t target, const Conclusion& conclusion )
{
    FuzzConfig cfg;
    PropertyRun out;
    for ( std::uint64_t trial = 0; out.instances < target && trial < 100 * target; ++trial )
    {
        auto model = gen_game( derive_seed( 2024, trial, purpose ), cfg );
        auto game = Game::compile( model );
        Checker checker( game );
        Rng rng( derive_seed( 2024, trial, purpose + 1 ) );
        auto actor = gen_coalition( rng, model.agents );
        auto intel = gen_coalition( rng, model.agents ).without( actor );
        auto body = gen_formula( rng, 2, model.agents, fuzz_atoms() );
        const auto& w = model.states[ rng() % model.states.size() ];
        if ( !checker.satisfies( w, intel_power( actor, intel, body ) ) )
            continue;
        ++out.instances;
        if ( !checker.satisfies( w, conclusion( rng, model.agents, actor, intel, body ) ) )
            ++out.counterexamples;
    }
    return out;
}

Outcome semantic_properties()
{
    const std::size_t target = 500;
    auto coalition = run_property( 10, target, []( Rng& rng, const auto& agents, const Coalition& c,
                                                   const Coalition& b, const Formula& f ) {
        return intel_power( c.united_with( gen_coalition( rng, agents ).without( b ) ), b, f );
    } );
    auto intel = run_property( 20, target, []( Rng& rng, const auto& agents, const Coalition& c, const Coalition& b,
                                               const Formula& f ) {
        return intel_power( c, b.united_with( gen_coalition( rng, agents ).without( c ) ), f );
    } );
    auto introspection = run_property( 30, target, []( Rng&, const auto&, const Coalition& c, const Coalition& b,
                                                       const Formula& f ) { return knows( c, intel_power( c, b, f ) ); } );

    std::ostringstream detail;
    detail << "coalition monotonicity " << coalition.counterexamples << "/" << coalition.instances
           << ", intelligence monotonicity " << intel.counterexamples << "/" << intel.instances
           << ", strategic introspection " << introspection.counterexamples << "/" << introspection.instances
           << " counterexamples (premise holding in every instance)";
    bool pass = true;
    for ( const auto& run : { coalition, intel, introspection } )
        pass = pass && run.instances >= target && run.counterexamples == 0;
    return { pass, detail.str() };
}

} // namespace

int main()
{
    const std::vector< std::pair< std::string, std::function< Outcome() > > > criteria = {
            { "1 Atlantic modal facts", atlantic_facts },
            { "2 wildcard expansion of (1,{British:2,Germans:3},s) and mirror", wildcard_expansion },
            { "3 checker/oracle equivalence", oracle_equivalence },
            { "4 proof kernel transcripts and mutants", proof_kernel },
            { "5 soundness fuzz", soundness_fuzz },
            { "6 semantic monotonicity and introspection", semantic_properties },
    };

    int failures = 0;
    for ( const auto& [ name, run ] : criteria )
    {
        Outcome outcome{ false, "" };
        try
        {
            outcome = run();
        }
        catch ( const std::exception& e )
        {
            outcome = { false, std::string( "exception: " ) + e.what() };
        }
        std::printf( "%s criterion %s: %s\n", outcome.pass ? "PASS" : "FAIL", name.c_str(), outcome.detail.c_str() );
        std::fflush( stdout );
        failures += outcome.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
