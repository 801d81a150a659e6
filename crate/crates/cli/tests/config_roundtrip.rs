use eit_bragg_cli::config::{
    Command, Format, LatticeSection, MediumSection, Model, OracleSection, OutputSpec, RunConfig,
    StarkSection, SweepSection,
};
use eit_bragg_cli::{Quantity, Unit};
use proptest::option;
use proptest::prelude::*;
use proptest::sample::select;

fn value() -> impl Strategy<Value = f64> {
    prop::num::f64::NORMAL | prop::num::f64::SUBNORMAL | prop::num::f64::ZERO
}

fn quantity() -> impl Strategy<Value = Quantity> {
    (value(), option::of(select(Unit::ALL.to_vec()))).prop_map(|(value, unit)| Quantity { value, unit })
}

prop_compose! {
    fn medium()(
        gamma_e in quantity(),
        gamma_s in option::of(quantity()),
        omega_d in quantity(),
        a0 in option::of(quantity()),
        optical_depth in option::of(value()),
        sigma0 in option::of(quantity()),
        rho0 in option::of(quantity()),
    ) -> MediumSection {
        MediumSection { gamma_e, gamma_s, omega_d, a0, optical_depth, sigma0, rho0 }
    }
}

prop_compose! {
    fn lattice()(
        lambda_lat in option::of(quantity()),
        length in option::of(quantity()),
        n_periods in option::of(any::<u32>()),
        delta_r in option::of(quantity()),
        delta_s in option::of(quantity()),
        omega_eg in option::of(quantity()),
        atomic_mass in option::of(quantity()),
    ) -> LatticeSection {
        LatticeSection { lambda_lat, length, n_periods, delta_r, delta_s, omega_eg, atomic_mass }
    }
}

prop_compose! {
    fn sweep()(
        delta_min in quantity(),
        delta_max in quantity(),
        n_points in 0usize..1_000_000,
        resonant_drive in any::<bool>(),
        delta_r in option::of(quantity()),
    ) -> SweepSection {
        SweepSection { delta_min, delta_max, n_points, resonant_drive, delta_r }
    }
}

fn output() -> impl Strategy<Value = OutputSpec> {
    (
        select(vec![Format::Csv, Format::Json, Format::Svg]),
        "[a-z0-9_]{1,8}(/[a-z0-9_]{1,8})?\\.[a-z]{3,4}",
        option::of(select(vec![
            Command::Spectrum,
            Command::Dispersion,
            Command::Bandgap,
            Command::Validate,
            Command::Susceptibility,
        ])),
    )
        .prop_map(|(format, path, command)| OutputSpec {
            format,
            path: path.into(),
            command,
        })
}

prop_compose! {
    fn run_config()(
        model in select(vec![Model::ColdLattice, Model::ThermalStark, Model::TwoLevel]),
        medium in medium(),
        lattice in option::of(lattice()),
        stark in option::of((quantity(), quantity()).prop_map(|(s_g, s_s)| StarkSection { s_g, s_s })),
        sweep in option::of(sweep()),
        oracle in option::of((0usize..10_000_000).prop_map(|n_steps| OracleSection { n_steps })),
        outputs in prop::collection::vec(output(), 0..4),
    ) -> RunConfig {
        RunConfig { model, medium, lattice, stark, sweep, oracle, outputs }
    }
}

proptest! {
    #[test]
    fn serializer_and_parser_round_trip(cfg in run_config()) {
        let text = cfg.to_toml_string();
        let back = RunConfig::from_toml_str(&text).map_err(|e| TestCaseError::fail(format!("{e}\n{text}")))?;
        prop_assert_eq!(back, cfg);
    }

    #[test]
    fn quantity_strings_round_trip(q in quantity()) {
        let parsed: Quantity = q.to_string().parse().unwrap();
        prop_assert_eq!(parsed.unit, q.unit);
        prop_assert_eq!(parsed.value.to_bits(), q.value.to_bits());
    }
}
