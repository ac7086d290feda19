use std::process::ExitCode;

use clap::ValueEnum;
use metamorph::instances::BaseConversion;
use metamorph::verify::suites::{CoalgebraChoice, ConditionChoice, InstanceChoice, Scenario, StateDomain};
use metamorph::verify::{SamplePlan, DEFAULT_BUDGET};

use crate::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Instance {
    Baseconv,
    Heapsort,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Condition {
    Streaming,
    StreamingLemma,
    JigsawInfinite,
    JigsawGeneral,
    FillIhIndexLaw,
    Equivalence,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Coalgebra {
    Eager,
    Streaming,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum States {
    /// States reachable from the initial state by consuming or producing.
    Reachable,
    /// Small rational triples, reachable or not.
    Arbitrary,
}

#[derive(clap::Args)]
pub struct Args {
    #[arg(long, value_enum)]
    instance: Instance,
    #[arg(long, value_enum)]
    condition: Condition,
    /// Size bound for sampled states, heaps and input lists.
    #[arg(long, default_value_t = 4)]
    max_len: usize,
    /// Sample randomly from this seed instead of enumerating everything.
    /// Equivalence checks always enumerate.
    #[arg(long)]
    seed: Option<u64>,
    /// Number of random cases per check when `--seed` is given.
    #[arg(long, default_value_t = 10_000)]
    draws: usize,
    /// Base-conversion coalgebra under test.
    #[arg(long, value_enum, default_value_t = Coalgebra::Streaming)]
    coalgebra: Coalgebra,
    /// Base-conversion state domain.
    #[arg(long, value_enum, default_value_t = States::Reachable)]
    states: States,
    /// Base-conversion input base.
    #[arg(long, default_value_t = 10)]
    from: u32,
    /// Base-conversion output base.
    #[arg(long, default_value_t = 2)]
    to: u32,
    /// Maximum number of cases evaluated per check.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    /// Output prefix length compared by equivalence checks.
    #[arg(long, default_value_t = 8)]
    prefix: usize,
    #[arg(long)]
    json: bool,
}

pub fn run(args: &Args) -> Result<ExitCode, Failure> {
    let instance = match args.instance {
        Instance::Baseconv => InstanceChoice::BaseConversion(
            BaseConversion::new(args.from, args.to).map_err(|e| Failure::Usage(e.to_string()))?,
        ),
        Instance::Heapsort => InstanceChoice::Heapsort,
    };
    let condition = match args.condition {
        Condition::Streaming => ConditionChoice::Streaming,
        Condition::StreamingLemma => ConditionChoice::StreamingLemma,
        Condition::JigsawInfinite => ConditionChoice::JigsawInfinite,
        Condition::JigsawGeneral => ConditionChoice::JigsawGeneral,
        Condition::FillIhIndexLaw => ConditionChoice::FillIhIndexLaw,
        Condition::Equivalence => ConditionChoice::Equivalence,
    };
    let plan = match args.seed {
        Some(seed) => SamplePlan::random(args.max_len, seed, args.draws),
        None => SamplePlan::exhaustive(args.max_len),
    }
    .with_budget(args.budget);

    let mut scenario = Scenario::new(instance, condition, plan);
    scenario.prefix = args.prefix;
    scenario.coalgebra = match args.coalgebra {
        Coalgebra::Eager => CoalgebraChoice::Eager,
        Coalgebra::Streaming => CoalgebraChoice::Streaming,
    };
    scenario.states = match args.states {
        States::Reachable => StateDomain::Reachable,
        States::Arbitrary => StateDomain::Arbitrary,
    };

    let report = scenario.run().map_err(|e| Failure::Usage(e.to_string()))?;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    } else {
        print!("{report}");
    }
    Ok(if report.holds() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
