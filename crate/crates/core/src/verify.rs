//! Sweeps that cross-check the formulas over ranges of `(r, n)`.
//!
//! Each suite splits into independent instances that run on the rayon pool;
//! results are merged in instance order so reports are deterministic.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::bijection::{stripless_to_syt, syt_to_stripless};
use crate::klyachko::{binomial_identity_check, coeff_via_fill0, gamma_klyachko, gamma_stripless};
use crate::mondrian::{
    gap_of_partition, m_class_explicit, m_class_recursive, pie_refined_coefficient, restrict_shift,
    split_product, summed_m_class, term_coefficient_tableaux, GapVector, SplitSequence,
};
use crate::schubert::{berget_fink_class, multiply, FormalClass};
use crate::tableau::{
    bf_complement, complement, count_zero_strip_less_in, descents, enumerate_ssyt, enumerate_syt,
    is_one_strip_less, is_zero_strip_less, GrassmannianContext, Partition,
};
use crate::klyachko::klyachko_class;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    /// Berget-Fink class against Klyachko's and the 1-strip-less count.
    OrbitCount,
    /// Closed Mondrian formula against the recursion, and its restriction
    /// against `sigma_lambda * sigma_lambda~`.
    MondrianRecursion,
    /// Mondrian coefficients against tableau counts, per split.
    MondrianTableaux,
    /// Summed Mondrian class against the 0-strip-less re-summation.
    Resummation,
    /// Descent bijection round trips and cardinalities.
    Bijection,
    /// 0-strip-less inclusion-exclusion against enumeration.
    InclusionExclusion,
    /// The binomial identity behind the re-summation.
    Identity,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::OrbitCount,
        Suite::MondrianRecursion,
        Suite::MondrianTableaux,
        Suite::Resummation,
        Suite::Bijection,
        Suite::InclusionExclusion,
        Suite::Identity,
    ];

    /// Command-line token.
    pub fn name(self) -> &'static str {
        match self {
            Suite::OrbitCount => "thm3",
            Suite::MondrianRecursion => "prop33",
            Suite::MondrianTableaux => "cor42",
            Suite::Resummation => "prop51",
            Suite::Bijection => "bijection",
            Suite::InclusionExclusion => "lemma21",
            Suite::Identity => "identity",
        }
    }
}

impl Suite {
    /// Descriptive spelling, accepted alongside the token.
    pub fn alias(self) -> &'static str {
        match self {
            Suite::OrbitCount => "orbit-count",
            Suite::MondrianRecursion => "mondrian-recursion",
            Suite::MondrianTableaux => "mondrian-tableaux",
            Suite::Resummation => "resummation",
            Suite::Bijection => "bijection",
            Suite::InclusionExclusion => "inclusion-exclusion",
            Suite::Identity => "identity",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s || suite.alias() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// SYT and 1-strip-less counts for one shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CardinalityRow {
    pub r: usize,
    pub n: usize,
    pub mu: Partition,
    pub syt: usize,
    pub stripless: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: usize,
    pub counterexample: Option<String>,
    /// Filled by the bijection suite only.
    pub table: Vec<CardinalityRow>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Default)]
struct Outcome {
    checks: usize,
    failure: Option<String>,
    table: Vec<CardinalityRow>,
}

impl Outcome {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }
}

/// Runs `suite` over every valid `(r, n)` in the ranges. The identity suite
/// uses `n` only.
pub fn run_suite(suite: Suite, r_range: RangeInclusive<usize>, n_range: RangeInclusive<usize>) -> SuiteReport {
    let instances: Vec<(usize, usize)> = if suite == Suite::Identity {
        n_range.map(|n| (0, n)).collect()
    } else {
        r_range
            .flat_map(|r| n_range.clone().map(move |n| (r, n)))
            .filter(|&(r, n)| r >= 1 && r < n)
            .collect()
    };
    let outcomes: Vec<Outcome> = instances
        .par_iter()
        .map(|&(r, n)| match suite {
            Suite::Identity => identity(n),
            _ => {
                let ctx = GrassmannianContext::new(r, n).expect("filtered to r < n");
                match suite {
                    Suite::OrbitCount => orbit_count(ctx),
                    Suite::MondrianRecursion => mondrian_recursion(ctx),
                    Suite::MondrianTableaux => mondrian_tableaux(ctx),
                    Suite::Resummation => resummation(ctx),
                    Suite::Bijection => bijection(ctx),
                    Suite::InclusionExclusion => inclusion_exclusion(ctx),
                    Suite::Identity => unreachable!(),
                }
            }
        })
        .collect();
    let mut report = SuiteReport {
        suite,
        checks: 0,
        counterexample: None,
        table: Vec::new(),
    };
    for o in outcomes {
        report.checks += o.checks;
        if report.counterexample.is_none() {
            report.counterexample = o.failure;
        }
        report.table.extend(o.table);
    }
    report
}

fn first_difference(a: &FormalClass<BigInt>, b: &FormalClass<BigInt>) -> String {
    let keys = a.terms().keys().chain(b.terms().keys());
    for mu in keys {
        let (x, y) = (a.coefficient(mu), b.coefficient(mu));
        if x != y {
            return format!("coefficient of s{mu}: {x} vs {y}");
        }
    }
    "classes differ".into()
}

fn orbit_count(ctx: GrassmannianContext) -> Outcome {
    let mut out = Outcome::default();
    let bf: FormalClass<BigInt> = berget_fink_class(ctx);
    let kl: FormalClass<BigInt> = klyachko_class(ctx);
    out.check(bf == kl, || format!("{ctx}: Berget-Fink vs Klyachko, {}", first_difference(&bf, &kl)));
    for mu in ctx.partitions_of_size(ctx.orbit_degree()) {
        let g = gamma_klyachko(&mu, &ctx).expect("mu fits");
        let s = gamma_stripless(&mu, &ctx).expect("mu fits");
        out.check(g == s && g >= BigInt::default(), || {
            format!("{ctx}, mu = {mu}: Klyachko {g} vs 1-strip-less {s}")
        });
    }
    out
}

fn mondrian_recursion(ctx: GrassmannianContext) -> Outcome {
    let mut out = Outcome::default();
    let (h, w) = ctx.inner_box();
    for lambda in Partition::all_in_box(h, w) {
        let g = gap_of_partition(&lambda, &ctx).expect("inner box");
        let explicit: FormalClass<BigInt> = m_class_explicit(&g);
        let recursive: FormalClass<BigInt> = m_class_recursive(&g);
        out.check(explicit == recursive, || {
            format!("a = {:?}: {}", g.values(), first_difference(&explicit, &recursive))
        });
        let (restricted, dropped) = restrict_shift(&explicit, ctx.r() - 1).expect("valid shift");
        let tilde = bf_complement(&lambda, &ctx).expect("inner box");
        let product = multiply(
            &FormalClass::schubert(ctx, lambda.clone()).expect("fits"),
            &FormalClass::schubert(ctx, tilde).expect("fits"),
        )
        .expect("same context");
        out.check(dropped == 0 && restricted == product, || {
            format!("{ctx}, lambda = {lambda}: restriction differs ({dropped} dropped)")
        });
    }
    out
}

fn mondrian_tableaux(ctx: GrassmannianContext) -> Outcome {
    let mut out = Outcome::default();
    let (r, n) = (ctx.r(), ctx.n());
    let splits = SplitSequence::all(r);
    for g in GapVector::all(r, n) {
        let m: FormalClass<BigInt> = m_class_explicit(&g);
        let products: Vec<FormalClass<BigInt>> = splits.iter().map(|s| split_product(&g, s)).collect();
        for mu in g.big_ctx().partitions_of_size((r - 1) * (n - 1)) {
            let refined = BigInt::from(pie_refined_coefficient(&mu, &g).expect("fits"));
            out.check(refined == m.coefficient(&mu), || {
                format!("a = {:?}, mu = {mu}: refined count {refined} vs {}", g.values(), m.coefficient(&mu))
            });
            let mut alternating = BigInt::default();
            for (s, product) in splits.iter().zip(&products) {
                let count = BigInt::from(term_coefficient_tableaux(&mu, &g, s).expect("fits"));
                out.check(count == product.coefficient(&mu), || {
                    format!("a = {:?}, s = {:?}, mu = {mu}: {count} vs {}", g.values(), s.values(), product.coefficient(&mu))
                });
                if (r - s.len()) % 2 == 0 {
                    alternating += count;
                } else {
                    alternating -= count;
                }
            }
            out.check(alternating == refined, || {
                format!("a = {:?}, mu = {mu}: inclusion-exclusion gives {alternating}", g.values())
            });
        }
    }
    out
}

fn resummation(ctx: GrassmannianContext) -> Outcome {
    let mut out = Outcome::default();
    let summed: FormalClass<BigInt> = summed_m_class(ctx);
    let big = ctx.enlarged();
    for mu in big.partitions_of_size((ctx.r() - 1) * (ctx.n() - 1)) {
        let via = coeff_via_fill0(&mu, &big).expect("fits");
        out.check(via == summed.coefficient(&mu), || {
            format!("{ctx}, mu = {mu}: summed class {} vs 0-strip-less sum {via}", summed.coefficient(&mu))
        });
    }
    let (restricted, dropped) = restrict_shift(&summed, ctx.r() - 1).expect("valid shift");
    let bf: FormalClass<BigInt> = berget_fink_class(ctx);
    out.check(dropped == 0 && restricted == bf, || format!("{ctx}: restricted sum differs from Berget-Fink"));
    out
}

fn bijection(ctx: GrassmannianContext) -> Outcome {
    let mut out = Outcome::default();
    let (r, n) = (ctx.r(), ctx.n());
    for mu in ctx.partitions_of_size(ctx.orbit_degree()) {
        let bar = complement(&mu, &ctx).expect("fits");
        let mut syt = 0;
        for t in enumerate_syt(&bar).filter(|t| descents(t).map(|d| d.len() + 1 == r).unwrap_or(false)) {
            syt += 1;
            let back = syt_to_stripless(&t, &ctx).and_then(|s| stripless_to_syt(&s, &ctx));
            out.check(back.as_ref() == Ok(&t), || format!("{ctx}: SYT round trip fails on\n{t}"));
        }
        let mut stripless = 0;
        for t in enumerate_ssyt(&mu, r).filter(|t| is_one_strip_less(t, ctx.width())) {
            stripless += 1;
            let back = stripless_to_syt(&t, &ctx).and_then(|s| syt_to_stripless(&s, &ctx));
            out.check(back.as_ref() == Ok(&t), || format!("{ctx}: SSYT round trip fails on\n{t}"));
        }
        out.check(syt == stripless, || format!("{ctx}, mu = {mu}: {syt} SYT vs {stripless} 1-strip-less"));
        out.table.push(CardinalityRow { r, n, mu, syt, stripless });
    }
    out
}

fn inclusion_exclusion(ctx: GrassmannianContext) -> Outcome {
    let mut out = Outcome::default();
    let (r, w) = (ctx.r(), ctx.width());
    for mu in ctx.all_partitions() {
        let formula = count_zero_strip_less_in(&mu, r, w);
        let direct = enumerate_ssyt(&mu, r).filter(|t| is_zero_strip_less(t, w)).count();
        out.check(formula == BigInt::from(direct), || {
            format!("{ctx}, mu = {mu}: inclusion-exclusion {formula} vs enumeration {direct}")
        });
    }
    out
}

fn identity(n: usize) -> Outcome {
    let mut out = Outcome::default();
    for r in 0..=n {
        for l in 0..=r {
            out.check(binomial_identity_check(n, r, l), || format!("n = {n}, r = {r}, l = {l}"));
        }
    }
    out
}
