#include "cil/cli.hpp"

#include "cil/checker.hpp"
#include "cil/errors.hpp"
#include "cil/fuzz.hpp"
#include "cil/model_io.hpp"
#include "cil/parser.hpp"
#include "cil/proof_script.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

namespace cil
{

namespace
{

void add_fuzz_options( CLI::App& cmd, FuzzConfig& cfg )
{
    cmd.add_option( "--seed", cfg.seed, "base seed" )->capture_default_str();
    cmd.add_option( "--trials", cfg.trials, "number of trials" )->capture_default_str();
    cmd.add_option( "--max-states", cfg.max_states )->capture_default_str()->check( CLI::PositiveNumber );
    cmd.add_option( "--max-agents", cfg.max_agents )->capture_default_str()->check( CLI::PositiveNumber );
    cmd.add_option( "--max-actions", cfg.max_actions )->capture_default_str()->check( CLI::PositiveNumber );
    cmd.add_option( "--max-depth", cfg.max_formula_depth )->capture_default_str()->check( CLI::PositiveNumber );
    cmd.add_option( "--max-rules", cfg.max_rules )->capture_default_str()->check( CLI::PositiveNumber );
}

void print( std::ostream& out, const Json& report ) { out << report.dump( 2 ) << "\n"; }

int check( const std::string& model_path, const std::string& formula_text, const std::optional< std::string >& state,
           bool witness, std::ostream& out )
{
    auto game = Game::compile( load_model( model_path ) );
    auto f = parse_formula( formula_text );
    Checker checker( game );

    Json report;
    report[ "formula" ] = f.to_string();
    if ( !state )
    {
        auto failing = checker.failing_states( f );
        report[ "valid" ] = failing.empty();
        report[ "failing_states" ] = failing;
        print( out, report );
        return failing.empty() ? exit_positive : exit_negative;
    }

    report[ "state" ] = *state;
    bool holds;
    if ( f.is( FormulaKind::IntelPower ) )
    {
        auto result = checker.check_intel_power( *state, f.actor(), f.intel(), f.body() );
        if ( !witness )
            result.witness.reset();
        holds = result.holds;
        report.update( check_result_to_json( result ) );
    }
    else
    {
        holds = checker.satisfies( *state, f );
        report[ "holds" ] = holds;
    }
    print( out, report );
    return holds ? exit_positive : exit_negative;
}

int validate( const std::string& model_path, std::ostream& out )
{
    auto diagnostics = validate_model( load_model( model_path ) );
    Json report;
    report[ "valid" ] = diagnostics.empty();
    report[ "diagnostics" ] = Json::array();
    for ( const auto& d : diagnostics )
        report[ "diagnostics" ].push_back( d.to_string() );
    print( out, report );
    return diagnostics.empty() ? exit_positive : exit_negative;
}

int prove( const std::string& script_path, std::ostream& out )
{
    auto script = load_proof_script( script_path );
    auto verdict = check_proof( script );
    print( out, verdict_to_json( script, verdict ) );
    return verdict.ok ? exit_positive : exit_negative;
}

} // namespace

int run_cli( int argc, const char* const* argv, std::ostream& out, std::ostream& err )
{
    CLI::App app{ "Model checker, proof kernel and soundness fuzzer for the logic of know-how with intelligence" };
    app.require_subcommand( 1 );

    std::string model_path, formula_text, script_path;
    std::optional< std::string > state;
    bool witness = false;

    auto* check_cmd = app.add_subcommand( "check", "evaluate a formula at a state, or at every state" );
    check_cmd->add_option( "model", model_path, "model file" )->required();
    check_cmd->add_option( "formula", formula_text, "formula in concrete syntax" )->required();
    check_cmd->add_option( "--state", state, "state to evaluate at; without it, check validity" );
    check_cmd->add_flag( "--witness", witness, "print the strategy table of a holding [C]{B} formula" );

    auto* validate_cmd = app.add_subcommand( "validate", "check a model file for well-formedness" );
    validate_cmd->add_option( "model", model_path, "model file" )->required();

    auto* prove_cmd = app.add_subcommand( "prove", "verify a proof script" );
    prove_cmd->add_option( "script", script_path, "proof script" )->required();

    FuzzConfig fuzz_cfg;
    auto* fuzz_cmd = app.add_subcommand( "fuzz", "test axiom soundness on random games" );
    add_fuzz_options( *fuzz_cmd, fuzz_cfg );
    fuzz_cmd->add_option( "--instances", fuzz_cfg.instances_per_schema, "instances per schema and trial" )
            ->capture_default_str();

    auto oracle_cfg = FuzzConfig::oracle_defaults();
    auto* oracle_cmd = app.add_subcommand( "oracle-diff", "compare the checker with the brute-force oracle" );
    add_fuzz_options( *oracle_cmd, oracle_cfg );

    try
    {
        app.parse( argc, argv );
    }
    catch ( const CLI::CallForHelp& e )
    {
        return app.exit( e, out, err );
    }
    catch ( const CLI::ParseError& e )
    {
        app.exit( e, out, err );
        return exit_usage;
    }

    try
    {
        if ( *check_cmd )
            return check( model_path, formula_text, state, witness, out );
        if ( *validate_cmd )
            return validate( model_path, out );
        if ( *prove_cmd )
            return prove( script_path, out );
        if ( *fuzz_cmd )
        {
            auto report = fuzz_soundness( fuzz_cfg );
            print( out, fuzz_report_to_json( fuzz_cfg, report ) );
            return report.sound() ? exit_positive : exit_negative;
        }
        if ( *oracle_cmd )
        {
            auto report = oracle_diff( oracle_cfg );
            print( out, oracle_report_to_json( oracle_cfg, report ) );
            return report.discrepancies.empty() ? exit_positive : exit_negative;
        }
    }
    catch ( const ModelError& e )
    {
        for ( const auto& d : e.diagnostics() )
            err << d.to_string() << "\n";
        return exit_usage;
    }
    catch ( const ParseError& e )
    {
        err << "parse error at " << e.what() << "\n";
        return exit_usage;
    }
    catch ( const Error& e )
    {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

} // namespace cil
