use serde::Serialize;

use ekalg::dyer_lashof::Family;
use ekalg::koszul::{self, ModulePresentation, TensorAlgebra};
use ekalg::may_chart::{self, ChartSpec};
use ekalg::steenrod::{steinberger_consistency, DualSteenrod, QuotientSpec};

use crate::output::{self, Check, Report};
use crate::{
    CrosscheckArgs, Failure, Format, KoszulArgs, MayChartArgs, ModuleKind, SteenrodArgs,
    SteenrodCheck,
};

#[derive(Debug, Serialize)]
struct ChartRow {
    t: i64,
    f: i64,
    dim: u64,
}

#[derive(Debug, Serialize)]
struct ChartGeneratorRow {
    family: Family,
    name: String,
    i: i64,
    j: i64,
    t: i64,
    f: i64,
}

#[derive(Debug, Serialize)]
struct ChartJson {
    schema: u32,
    prime: u32,
    t_max: i64,
    f_max: i64,
    rows: Vec<ChartRow>,
    generators: Vec<ChartGeneratorRow>,
}

pub fn may_chart(args: &MayChartArgs) -> Result<bool, Failure> {
    let spec = ChartSpec::new(args.prime, args.tmax, args.fmax)?;
    let chart = may_chart::build_chart(&spec)?;
    let rows: Vec<ChartRow> = chart
        .dims
        .iter()
        .map(|(b, dim)| ChartRow { t: b.t, f: b.w, dim })
        .collect();
    let text = match args.format {
        Format::Csv => {
            let mut s = String::from("t,f,dim\n");
            for r in &rows {
                s.push_str(&format!("{},{},{}\n", r.t, r.f, r.dim));
            }
            s
        }
        Format::Json => {
            let mut generators: Vec<ChartGeneratorRow> = chart
                .generators
                .iter()
                .map(|g| ChartGeneratorRow {
                    family: g.generator.family,
                    name: g.name(),
                    i: g.generator.i,
                    j: g.generator.j,
                    t: g.bidegree.t,
                    f: g.bidegree.w,
                })
                .collect();
            generators.sort_by_key(|g| (g.t, g.f, g.family, g.i, g.j));
            output::json(&ChartJson {
                schema: 1,
                prime: args.prime.get(),
                t_max: args.tmax,
                f_max: chart.f_max,
                rows,
                generators,
            })
        }
    };
    output::write(args.out.as_deref(), &text)?;
    Ok(true)
}

#[derive(Debug, Serialize)]
struct SteenrodParams {
    prime: u32,
    n: u32,
    conjugated: bool,
    d_max: i64,
    s_max: usize,
    check: &'static str,
}

pub fn steenrod(args: &SteenrodArgs) -> Result<bool, Failure> {
    let a = DualSteenrod::new(args.prime, args.dmax)?;
    let q = QuotientSpec {
        n: args.n,
        conjugated: args.conjugated,
    };
    let want = |c: SteenrodCheck| args.check == c || args.check == SteenrodCheck::All;
    let mut checks = Vec::new();
    if want(SteenrodCheck::Iso) {
        let r = a.subring_iso_check(q, args.dmax)?;
        let quotient = a.quotient_basis(q, args.dmax)?;
        let series: Vec<u64> = (0..=args.dmax).map(|d| quotient.dims.dim_in_degree(d)).collect();
        #[derive(Serialize)]
        struct Iso<'a> {
            quotient_series: Vec<u64>,
            rows: &'a [ekalg::steenrod::IsoRow],
        }
        checks.push(Check::new(
            "iso",
            r.passed(),
            &Iso {
                quotient_series: series,
                rows: &r.rows,
            },
        ));
    }
    if want(SteenrodCheck::Free) {
        let r = a.freeness_check(q, args.dmax)?;
        checks.push(Check::new("free", r.passed(), &r.rows));
    }
    if want(SteenrodCheck::Tor) {
        let r = a.kunneth_e2(q, args.dmax, args.smax)?;
        #[derive(Serialize)]
        struct Tor {
            higher_tor_vanishes: bool,
            tor0_matches_quotient: bool,
            tor0_series: Vec<u64>,
            quotient_series: Vec<u64>,
            tor: Vec<ekalg::bar::TorRow>,
        }
        checks.push(Check::new(
            "tor",
            r.passed(),
            &Tor {
                higher_tor_vanishes: r.higher_tor_vanishes(),
                tor0_matches_quotient: r.tor0_matches_quotient(),
                tor0_series: r.tor.series(0),
                quotient_series: r.quotient_series.clone(),
                tor: r.tor.rows(),
            },
        ));
    }
    let check = match args.check {
        SteenrodCheck::Iso => "iso",
        SteenrodCheck::Free => "free",
        SteenrodCheck::Tor => "tor",
        SteenrodCheck::All => "all",
    };
    let report = Report::new(
        "steenrod",
        SteenrodParams {
            prime: args.prime.get(),
            n: args.n,
            conjugated: args.conjugated,
            d_max: args.dmax,
            s_max: args.smax,
            check,
        },
        checks,
    );
    output::write(args.out.as_deref(), &output::json(&report))?;
    Ok(report.passed)
}

#[derive(Debug, Serialize)]
struct KoszulParams {
    prime: u32,
    vdegrees: Vec<u32>,
    module: String,
    d_max: usize,
}

pub fn koszul(args: &KoszulArgs) -> Result<bool, Failure> {
    let t = TensorAlgebra::from_degrees(args.prime, &args.vdegrees)?;
    let (label, presentation) = match args.module {
        ModuleKind::Trivial => ("trivial".to_string(), ModulePresentation::trivial(&t)),
        ModuleKind::Free => ("free".to_string(), ModulePresentation::free()),
        ModuleKind::Random(seed) => (format!("random:{seed}"), koszul::random_presentation(&t, seed)),
    };
    let complex = koszul::build_koszul(&t, &presentation, args.dmax)?;
    let r = koszul::exactness_check(&complex, args.dmax);
    #[derive(Serialize)]
    struct Exactness<'a> {
        presentation: &'a ModulePresentation,
        failures: Vec<usize>,
        rows: &'a [koszul::ExactnessRow],
    }
    let checks = vec![Check::new(
        "exactness",
        r.passed(),
        &Exactness {
            presentation: &presentation,
            failures: r.failures(),
            rows: &r.rows,
        },
    )];
    let report = Report::new(
        "koszul",
        KoszulParams {
            prime: args.prime.get(),
            vdegrees: args.vdegrees.clone(),
            module: label,
            d_max: args.dmax,
        },
        checks,
    );
    output::write(args.out.as_deref(), &output::json(&report))?;
    Ok(report.passed)
}

#[derive(Debug, Serialize)]
struct CrosscheckParams {
    prime: u32,
    i_max: i64,
    j_max: i64,
}

pub fn crosscheck(args: &CrosscheckArgs) -> Result<bool, Failure> {
    let r = may_chart::cross_check(args.prime, args.imax, args.jmax)?;
    let mut checks = vec![Check::new("closed_forms", r.passed(), &r)];
    if args.prime.is_odd() {
        let s = steinberger_consistency(args.prime, args.imax as u32)?;
        checks.push(Check::new("steinberger", s.passed(), &s));
    }
    let report = Report::new(
        "crosscheck",
        CrosscheckParams {
            prime: args.prime.get(),
            i_max: args.imax,
            j_max: args.jmax,
        },
        checks,
    );
    output::write(args.out.as_deref(), &output::json(&report))?;
    Ok(report.passed)
}
