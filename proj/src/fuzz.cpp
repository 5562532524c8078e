#include "cil/fuzz.hpp"

#include "cil/errors.hpp"
#include "cil/naive_check.hpp"

#include <algorithm>
#include <tuple>

namespace cil
{

namespace
{

std::uint64_t splitmix64( std::uint64_t x )
{
    x += 0x9e3779b97f4a7c15ULL;
    x = ( x ^ ( x >> 30 ) ) * 0xbf58476d1ce4e5b9ULL;
    x = ( x ^ ( x >> 27 ) ) * 0x94d049bb133111ebULL;
    return x ^ ( x >> 31 );
}

std::size_t pick( Rng& rng, std::size_t lo, std::size_t hi )
{
    return std::uniform_int_distribution< std::size_t >( lo, hi )( rng );
}

bool coin( Rng& rng ) { return pick( rng, 0, 1 ) == 1; }

std::vector< Agent > numbered( const char* prefix, std::size_t n )
{
    std::vector< Agent > out;
    for ( std::size_t i = 0; i < n; ++i )
        out.push_back( prefix + std::to_string( i ) );
    return out;
}

// Splits the agents into `parts` buckets, each agent landing in a uniformly
// chosen bucket or (index parts) in none.
std::vector< std::vector< Agent > > scatter( Rng& rng, const std::vector< Agent >& agents, std::size_t parts )
{
    std::vector< std::vector< Agent > > out( parts + 1 );
    for ( const auto& a : agents )
        out[ pick( rng, 0, parts ) ].push_back( a );
    return out;
}

void record_violation( FuzzReport& report, const FuzzConfig& cfg, std::size_t trial, std::string schema,
                       const Game& game, Checker& checker, const Formula& f )
{
    auto failing = checker.failing_states( f );
    report.violations.push_back(
            { cfg.seed, trial, std::move( schema ), game.model(), failing.empty() ? StateId{} : failing.front(), f } );
}

} // namespace

FuzzConfig FuzzConfig::oracle_defaults()
{
    FuzzConfig cfg;
    cfg.trials = 1000;
    cfg.max_states = 4;
    cfg.max_agents = 3;
    cfg.max_actions = 2;
    cfg.max_formula_depth = 3;
    cfg.max_rules = 8;
    return cfg;
}

void FuzzConfig::validate() const
{
    if ( max_states < 1 || max_agents < 1 || max_actions < 1 || max_formula_depth < 1 || max_rules < 1 )
        throw Error( "fuzz bounds must all be at least 1" );
}

const std::vector< std::string >& fuzz_atoms()
{
    static const std::vector< std::string > atoms = { "p", "q" };
    return atoms;
}

std::uint64_t derive_seed( std::uint64_t seed, std::uint64_t trial, std::uint64_t purpose )
{
    return splitmix64( splitmix64( splitmix64( seed ) ^ trial ) ^ purpose );
}

GameModel gen_game( std::uint64_t seed, const FuzzConfig& cfg )
{
    Rng rng( seed );
    GameModel m;
    m.states = numbered( "w", pick( rng, 1, cfg.max_states ) );
    m.agents = numbered( "a", pick( rng, 1, cfg.max_agents ) );
    m.actions = numbered( "", pick( rng, 1, cfg.max_actions ) );
    const auto n = m.states.size();

    for ( const auto& agent : m.agents )
    {
        if ( pick( rng, 0, 3 ) == 0 )
            continue;  // identity relation
        std::vector< std::size_t > label( n );
        for ( auto& l : label )
            l = pick( rng, 0, n - 1 );
        Partition blocks;
        std::vector< int > slot( n, -1 );
        for ( std::size_t s = 0; s < n; ++s )
        {
            if ( slot[ label[ s ] ] < 0 )
            {
                slot[ label[ s ] ] = static_cast< int >( blocks.size() );
                blocks.emplace_back();
            }
            blocks[ static_cast< std::size_t >( slot[ label[ s ] ] ) ].push_back( m.states[ s ] );
        }
        m.indist[ agent ] = std::move( blocks );
    }

    auto rules = pick( rng, 0, cfg.max_rules );
    for ( std::size_t i = 0; i < rules; ++i )
    {
        TransitionRule r;
        r.from = m.states[ pick( rng, 0, n - 1 ) ];
        r.to = m.states[ pick( rng, 0, n - 1 ) ];
        for ( const auto& agent : m.agents )
            if ( coin( rng ) )
                r.guard[ agent ] = m.actions[ pick( rng, 0, m.actions.size() - 1 ) ];
        m.rules.push_back( std::move( r ) );
    }

    for ( const auto& atom : fuzz_atoms() )
    {
        auto& members = m.valuation[ atom ];
        for ( const auto& s : m.states )
            if ( coin( rng ) )
                members.push_back( s );
    }
    return m;
}

Coalition gen_coalition( Rng& rng, const std::vector< Agent >& agents )
{
    std::vector< Agent > members;
    for ( const auto& a : agents )
        if ( coin( rng ) )
            members.push_back( a );
    return Coalition( std::move( members ) );
}

Formula gen_formula( Rng& rng, std::size_t depth, const std::vector< Agent >& agents,
                     const std::vector< std::string >& atoms )
{
    auto leaf = [ & ] { return atom( atoms[ pick( rng, 0, atoms.size() - 1 ) ] ); };
    if ( depth == 0 )
        return leaf();
    auto roll = pick( rng, 0, 19 );
    if ( roll < 2 )
        return leaf();
    if ( roll < 6 )
        return negation( gen_formula( rng, depth - 1, agents, atoms ) );
    if ( roll < 11 )
    {
        auto lhs = gen_formula( rng, depth - 1, agents, atoms );
        return implies( lhs, gen_formula( rng, depth - 1, agents, atoms ) );
    }
    if ( roll < 15 )
    {
        auto c = gen_coalition( rng, agents );
        return knows( c, gen_formula( rng, depth - 1, agents, atoms ) );
    }
    auto actor = gen_coalition( rng, agents );
    auto intel = gen_coalition( rng, agents ).without( actor );
    return intel_power( actor, intel, gen_formula( rng, depth - 1, agents, atoms ) );
}

Formula gen_formula( std::uint64_t seed, std::size_t depth, const std::vector< Agent >& agents,
                     const std::vector< std::string >& atoms )
{
    Rng rng( seed );
    return gen_formula( rng, depth, agents, atoms );
}

Formula instantiate_axiom( AxiomSchemaId id, std::uint64_t seed, const FuzzConfig& cfg )
{
    Rng rng( seed );
    return instantiate_axiom( id, rng, cfg, numbered( "a", cfg.max_agents ) );
}

Formula instantiate_axiom( AxiomSchemaId id, Rng& rng, const FuzzConfig& cfg, const std::vector< Agent >& agents )
{
    const auto depth = cfg.max_formula_depth > 1 ? cfg.max_formula_depth - 1 : 1;
    Substitution sigma;
    for ( const auto& slot : formula_slots( id ) )
        sigma.formulas.emplace( slot, gen_formula( rng, pick( rng, 0, depth ), agents, fuzz_atoms() ) );

    auto& c = sigma.coalitions;
    switch ( id )
    {
    case AxiomSchemaId::Truth:
    case AxiomSchemaId::Distributivity:
    case AxiomSchemaId::NegIntrospection:
        c[ "C" ] = gen_coalition( rng, agents );
        break;
    case AxiomSchemaId::EpistemicMono:
    {
        auto parts = scatter( rng, agents, 2 );  // C and D, D only
        c[ "C" ] = Coalition( parts[ 0 ] );
        c[ "D" ] = c[ "C" ].united_with( Coalition( parts[ 1 ] ) );
        break;
    }
    case AxiomSchemaId::StrategicIntrospection:
    {
        auto parts = scatter( rng, agents, 2 );
        c[ "C" ] = Coalition( parts[ 0 ] );
        c[ "B" ] = Coalition( parts[ 1 ] );
        break;
    }
    case AxiomSchemaId::EmptyCoalition:
        break;
    case AxiomSchemaId::Cooperation:
    {
        auto parts = scatter( rng, agents, 3 );
        c[ "B" ] = Coalition( parts[ 0 ] );
        c[ "C" ] = Coalition( parts[ 1 ] );
        c[ "D" ] = Coalition( parts[ 2 ] );
        break;
    }
    case AxiomSchemaId::IntelMono:
    {
        auto parts = scatter( rng, agents, 3 );  // C, B (and B'), B' only
        c[ "C" ] = Coalition( parts[ 0 ] );
        c[ "B" ] = Coalition( parts[ 1 ] );
        c[ "B'" ] = c[ "B" ].united_with( Coalition( parts[ 2 ] ) );
        break;
    }
    case AxiomSchemaId::NoneToAnalyze:
        c[ "B" ] = gen_coalition( rng, agents );
        break;
    }
    return instantiate_schema( id, sigma );
}

void FuzzReport::merge( FuzzReport other )
{
    for ( const auto& [ k, v ] : other.trials_run )
        trials_run[ k ] += v;
    for ( const auto& [ k, v ] : other.rule_checks )
        rule_checks[ k ] += v;
    for ( auto& v : other.violations )
        violations.push_back( std::move( v ) );
    std::stable_sort( violations.begin(), violations.end(), []( const Violation& a, const Violation& b ) {
        return std::tie( a.seed, a.trial ) < std::tie( b.seed, b.trial );
    } );
}

FuzzReport fuzz_trial( const FuzzConfig& cfg, std::size_t trial )
{
    FuzzReport report;
    auto game = Game::compile( gen_game( derive_seed( cfg.seed, trial, 0 ), cfg ) );
    Checker checker( game, cfg.check );
    Rng rng( derive_seed( cfg.seed, trial, 1 ) );
    const auto& agents = game.model().agents;

    for ( auto id : all_schemas )
    {
        auto name = std::string( schema_name( id ) );
        for ( std::size_t i = 0; i < cfg.instances_per_schema; ++i )
        {
            auto f = instantiate_axiom( id, rng, cfg, agents );
            ++report.trials_run[ name ];
            if ( !checker.valid_in_model( f ) )
                record_violation( report, cfg, trial, name, game, checker, f );
        }
    }

    // Necessitation preserves validity in the game. Candidates mix random
    // formulas, which are rarely valid, with axiom instances, which are.
    std::vector< Formula > candidates;
    for ( int i = 0; i < 2; ++i )
        candidates.push_back( gen_formula( rng, pick( rng, 0, cfg.max_formula_depth - 1 ), agents, fuzz_atoms() ) );
    candidates.push_back( instantiate_axiom( all_schemas[ pick( rng, 0, all_schemas.size() - 1 ) ], rng, cfg, agents ) );
    for ( const auto& f : candidates )
    {
        if ( !checker.valid_in_model( f ) )
            continue;
        auto k = knows( gen_coalition( rng, agents ), f );
        ++report.rule_checks[ "necK" ];
        if ( !checker.valid_in_model( k ) )
            record_violation( report, cfg, trial, "necK", game, checker, k );
        auto actor = gen_coalition( rng, agents );
        auto s = intel_power( actor, gen_coalition( rng, agents ).without( actor ), f );
        ++report.rule_checks[ "necS" ];
        if ( !checker.valid_in_model( s ) )
            record_violation( report, cfg, trial, "necS", game, checker, s );
    }

    // Modus ponens preserves truth state by state.
    auto phi = gen_formula( rng, pick( rng, 0, cfg.max_formula_depth ), agents, fuzz_atoms() );
    auto psi = gen_formula( rng, pick( rng, 0, cfg.max_formula_depth ), agents, fuzz_atoms() );
    auto step = implies( phi, psi );
    for ( StateIndex w = 0; w < game.num_states(); ++w )
    {
        ++report.rule_checks[ "mp" ];
        if ( checker.satisfies( w, phi ) && checker.satisfies( w, step ) && !checker.satisfies( w, psi ) )
            report.violations.push_back( { cfg.seed, trial, "mp", game.model(), game.state_name( w ), psi } );
    }
    return report;
}

FuzzReport fuzz_soundness( const FuzzConfig& cfg )
{
    cfg.validate();
    FuzzReport report;
    for ( std::size_t t = 0; t < cfg.trials; ++t )
        report.merge( fuzz_trial( cfg, t ) );
    return report;
}

Json fuzz_report_to_json( const FuzzConfig& cfg, const FuzzReport& report )
{
    Json out;
    out[ "seed" ] = cfg.seed;
    out[ "trials" ] = cfg.trials;
    out[ "sound" ] = report.sound();
    out[ "trials_run" ] = Json::object();
    for ( auto id : all_schemas )
    {
        auto name = std::string( schema_name( id ) );
        auto it = report.trials_run.find( name );
        out[ "trials_run" ][ name ] = it == report.trials_run.end() ? 0 : it->second;
    }
    out[ "rule_checks" ] = Json::object();
    for ( const auto* rule : { "necK", "necS", "mp" } )
    {
        auto it = report.rule_checks.find( rule );
        out[ "rule_checks" ][ rule ] = it == report.rule_checks.end() ? 0 : it->second;
    }
    out[ "violations" ] = Json::array();
    for ( const auto& v : report.violations )
        out[ "violations" ].push_back( { { "seed", v.seed },
                                         { "trial", v.trial },
                                         { "schema", v.schema },
                                         { "state", v.state },
                                         { "formula", v.formula.to_string() },
                                         { "model", model_to_json( v.model ) } } );
    return out;
}

OracleDiffReport oracle_diff( const FuzzConfig& cfg )
{
    cfg.validate();
    OracleDiffReport report;
    for ( std::size_t t = 0; t < cfg.trials; ++t )
    {
        auto model = gen_game( derive_seed( cfg.seed, t, 0 ), cfg );
        auto game = Game::compile( model );
        Rng rng( derive_seed( cfg.seed, t, 1 ) );
        auto f = gen_formula( rng, pick( rng, 0, cfg.max_formula_depth ), model.agents, fuzz_atoms() );
        const auto& w = model.states[ pick( rng, 0, model.states.size() - 1 ) ];
        Checker checker( game, cfg.check );
        bool fast = checker.satisfies( w, f );
        bool slow = naive_check( model, w, f );
        ++report.instances;
        if ( fast != slow )
            report.discrepancies.push_back( { cfg.seed, t, model, w, f, fast, slow } );
        else if ( fast )
            ++report.holding;
    }
    return report;
}

Json oracle_report_to_json( const FuzzConfig& cfg, const OracleDiffReport& report )
{
    Json out;
    out[ "seed" ] = cfg.seed;
    out[ "instances" ] = report.instances;
    out[ "holding" ] = report.holding;
    out[ "agree" ] = report.discrepancies.empty();
    out[ "discrepancies" ] = Json::array();
    for ( const auto& d : report.discrepancies )
        out[ "discrepancies" ].push_back( { { "seed", d.seed },
                                            { "trial", d.trial },
                                            { "state", d.state },
                                            { "formula", d.formula.to_string() },
                                            { "checker", d.checker },
                                            { "oracle", d.oracle },
                                            { "model", model_to_json( d.model ) } } );
    return out;
}

} // namespace cil
