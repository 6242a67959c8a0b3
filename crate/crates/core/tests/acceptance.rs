//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the test fails if any criterion does.
//!
//! Run with `cargo test -p stripless --test acceptance -- --nocapture`.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Signed;

use stripless::bijection::{stripless_to_syt, syt_to_blocks, syt_to_stripless};
use stripless::klyachko::{
    binomial_identity_check, coeff_via_fill0, gamma_klyachko, gamma_stripless, klyachko_class,
};
use stripless::mondrian::{
    bold_strips, gap_of_partition, gap_table, m_class_explicit, m_class_recursive,
    pie_refined_coefficient, refill, restrict_shift, split_product, summed_m_class,
    term_coefficient_tableaux, unrefill, GapVector, SplitSequence,
};
use stripless::schubert::{berget_fink_class, lr_coefficient, multiply, pieri_multiply};
use stripless::tableau::{
    bf_complement, complement, count_ssyt, count_zero_strip_less_in, descents, enumerate_ssyt,
    enumerate_syt, has_pair_strip, is_one_strip_less, is_pair_strip, is_zero_strip_less,
};
use stripless::{FormalClass, GrassmannianContext, Partition, SchubertClass, Tableau};

/// Every identity checked here is exact.
const TOLERANCE: u32 = 0;
const SWEEP_BUDGET: Duration = Duration::from_secs(300);
const MONDRIAN_BUDGET: Duration = Duration::from_secs(120);

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn close(a: &BigInt, b: &BigInt) -> bool {
    (a - b).abs() <= BigInt::from(TOLERANCE)
}

fn classes_agree(a: &SchubertClass, b: &SchubertClass) -> Result<(), String> {
    ensure(a.ctx() == b.ctx(), || format!("contexts {} vs {}", a.ctx(), b.ctx()))?;
    for mu in a.terms().keys().chain(b.terms().keys()) {
        let (x, y) = (a.coefficient(mu), b.coefficient(mu));
        ensure(close(&x, &y), || format!("{}: s{mu} has {x} vs {y}", a.ctx()))?;
    }
    Ok(())
}

fn ctx(r: usize, n: usize) -> GrassmannianContext {
    GrassmannianContext::new(r, n).unwrap()
}

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn parse_grid(text: &str) -> Tableau {
    let rows = text
        .lines()
        .map(|l| l.split_whitespace().map(|x| x.parse().unwrap()).collect())
        .collect();
    Tableau::from_rows(rows).unwrap()
}

/// `(r, n)` with `2 <= r <= 4`, `r + 2 <= n <= 9`.
fn sweep_range() -> Vec<GrassmannianContext> {
    (2..=4)
        .flat_map(|r| ((r + 2)..=9).map(move |n| ctx(r, n)))
        .collect()
}

fn timed(budget: Duration, body: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let detail = body()?;
    let elapsed = start.elapsed();
    ensure(elapsed <= budget, || format!("took {elapsed:?}, budget {budget:?}"))?;
    Ok(format!("{detail}, {:.2?}", elapsed))
}

fn criterion_1() -> Outcome {
    timed(SWEEP_BUDGET, || {
        let mut terms = 0;
        for g in sweep_range() {
            let bf: SchubertClass = berget_fink_class(g);
            classes_agree(&bf, &klyachko_class(g))?;
            terms += bf.len();
        }
        Ok(format!("{} Grassmannians, {terms} terms", sweep_range().len()))
    })
}

fn criterion_2() -> Outcome {
    timed(SWEEP_BUDGET, || {
        let mut shapes = 0;
        for g in sweep_range() {
            for mu in g.partitions_of_size(g.orbit_degree()) {
                let k = gamma_klyachko(&mu, &g).unwrap();
                let s = gamma_stripless(&mu, &g).unwrap();
                ensure(close(&k, &s), || format!("{g}, {mu}: {k} vs {s}"))?;
                ensure(!k.is_negative(), || format!("{g}, {mu}: negative {k}"))?;
                shapes += 1;
            }
        }
        Ok(format!("{shapes} shapes"))
    })
}

/// Brute force over all fillings with entries `1..=r`, testing strips by
/// trying every choice of one box per column.
fn oracle_class(g: GrassmannianContext) -> SchubertClass {
    let (r, w) = (g.r(), g.width());
    let terms = g.partitions_of_size(g.orbit_degree()).into_iter().map(|mu| {
        let cells: Vec<(usize, usize)> = (0..mu.len())
            .flat_map(|i| (0..mu.part(i)).map(move |j| (i, j)))
            .collect();
        let mut count = 0;
        for code in 0..r.pow(cells.len() as u32) {
            let mut rows: Vec<Vec<usize>> = mu.parts().iter().map(|&k| vec![0; k]).collect();
            let mut x = code;
            for &(i, j) in &cells {
                rows[i][j] = x % r + 1;
                x /= r;
            }
            let t = Tableau::from_rows(rows).unwrap();
            if t.is_semistandard() && !oracle_has_one_strip(&t, r, w) {
                count += 1;
            }
        }
        (mu, BigInt::from(count))
    });
    FormalClass::from_terms(g, terms).unwrap()
}

fn oracle_has_one_strip(t: &Tableau, r: usize, w: usize) -> bool {
    if t.shape().largest() < w {
        return false;
    }
    let heights: Vec<usize> = (0..w).map(|c| t.column(c).len()).collect();
    let mut choice = vec![0; w];
    loop {
        let boxes: Vec<(usize, usize)> = choice.iter().enumerate().map(|(c, &row)| (row, c)).collect();
        let upward = boxes.windows(2).all(|b| b[0].0 >= b[1].0);
        let entries: Vec<usize> = boxes.iter().map(|&(row, c)| t.get(row, c).unwrap()).collect();
        let sorted = entries.windows(2).all(|e| e[0] <= e[1]);
        if upward && sorted && (1..=r).any(|i| entries.iter().all(|&e| e == i || e == i + 1)) {
            return true;
        }
        let mut c = 0;
        loop {
            if c == w {
                return false;
            }
            choice[c] += 1;
            if choice[c] < heights[c] {
                break;
            }
            choice[c] = 0;
            c += 1;
        }
    }
}

fn criterion_3() -> Outcome {
    let expected: [(GrassmannianContext, Vec<(Partition, i64)>); 2] = [
        (ctx(2, 4), vec![(p(&[1]), 2)]),
        (ctx(2, 5), vec![(p(&[2]), 3), (p(&[1, 1]), 1)]),
    ];
    for (g, terms) in expected {
        let want = FormalClass::from_terms(g, terms.into_iter().map(|(m, c)| (m, BigInt::from(c)))).unwrap();
        classes_agree(&oracle_class(g), &want)?;
        classes_agree(&berget_fink_class(g), &want)?;
        classes_agree(&klyachko_class(g), &want)?;
    }
    Ok("2*s(1) and 3*s(2) + s(1,1)".into())
}

fn criterion_4() -> Outcome {
    timed(MONDRIAN_BUDGET, || {
        let mut count = 0;
        for r in 1..=4 {
            for n in (r + 1)..=8 {
                for g in GapVector::all(r, n) {
                    classes_agree(&m_class_explicit(&g), &m_class_recursive(&g))
                        .map_err(|e| format!("a = {:?}: {e}", g.values()))?;
                    count += 1;
                }
            }
        }
        Ok(format!("{count} gap vectors"))
    })
}

fn criterion_5() -> Outcome {
    let mut count = 0;
    for r in 1..=3 {
        for n in (r + 1)..=8 {
            let g = ctx(r, n);
            let (h, w) = g.inner_box();
            for lambda in Partition::all_in_box(h, w) {
                let m: SchubertClass = m_class_explicit(&gap_of_partition(&lambda, &g).unwrap());
                let (restricted, dropped) = restrict_shift(&m, r - 1).unwrap();
                ensure(dropped == 0, || format!("{g}, {lambda}: {dropped} terms dropped"))?;
                let tilde = bf_complement(&lambda, &g).unwrap();
                let product = multiply(
                    &FormalClass::schubert(g, lambda.clone()).unwrap(),
                    &FormalClass::schubert(g, tilde).unwrap(),
                )
                .unwrap();
                classes_agree(&restricted, &product).map_err(|e| format!("{lambda}: {e}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} partitions"))
}

fn criterion_6() -> Outcome {
    let mut checks = 0;
    for r in 1..=3 {
        for n in (r + 1)..=6 {
            for g in GapVector::all(r, n) {
                let m: SchubertClass = m_class_explicit(&g);
                let splits = SplitSequence::all(r);
                let products: Vec<SchubertClass> = splits.iter().map(|s| split_product(&g, s)).collect();
                for mu in g.big_ctx().partitions_of_size((r - 1) * (n - 1)) {
                    let refined = BigInt::from(pie_refined_coefficient(&mu, &g).unwrap());
                    ensure(close(&refined, &m.coefficient(&mu)), || {
                        format!("a = {:?}, {mu}: refined {refined} vs {}", g.values(), m.coefficient(&mu))
                    })?;
                    let mut alternating = BigInt::default();
                    for (s, product) in splits.iter().zip(&products) {
                        let count = BigInt::from(term_coefficient_tableaux(&mu, &g, s).unwrap());
                        ensure(close(&count, &product.coefficient(&mu)), || {
                            format!("a = {:?}, s = {:?}, {mu}: {count} vs {}", g.values(), s.values(), product.coefficient(&mu))
                        })?;
                        if (r - s.len()) % 2 == 0 {
                            alternating += count;
                        } else {
                            alternating -= count;
                        }
                        checks += 1;
                    }
                    ensure(close(&alternating, &refined), || {
                        format!("a = {:?}, {mu}: alternating sum {alternating} vs {refined}", g.values())
                    })?;
                }
            }
        }
    }
    Ok(format!("{checks} split terms"))
}

fn criterion_7() -> Outcome {
    let g = GapVector::new(vec![1, 3, 7, 8, 10, 14, 18]).unwrap();
    let s = SplitSequence::new(vec![0, 2, 5, 6], 6).unwrap();
    let input_text = golden("refill_n18_r6_input.txt");
    let output_text = golden("refill_n18_r6_output.txt");
    let input = parse_grid(&input_text);
    ensure(input.to_grid() == input_text, || "input golden is not canonical".into())?;
    ensure(input.content(6) == vec![17, 11, 17, 17, 10, 13], || format!("input type {:?}", input.content(6)))?;
    let out = refill(&input, &g, &s).map_err(|e| e.to_string())?;
    ensure(out.to_grid() == output_text, || format!("refilled tableau differs:\n{out}"))?;
    ensure(out.content(6) == vec![15, 13, 16, 15, 13, 13], || format!("output type {:?}", out.content(6)))?;
    let found: BTreeSet<usize> = (1..6).filter(|&i| has_pair_strip(&out, i, 17)).collect();
    ensure([1, 3, 4].iter().all(|i| found.contains(i)), || format!("strips at {found:?}"))?;
    for (i, boxes) in bold_strips(&out, &g, &s).map_err(|e| e.to_string())? {
        ensure(is_pair_strip(&out, &boxes, i, 17), || format!("certificate for {i} is not a strip"))?;
    }
    ensure(unrefill(&out, &g, &s).as_ref() == Ok(&input), || "unrefill does not return the input".into())?;
    Ok(format!("strips at {found:?}"))
}

fn criterion_8() -> Outcome {
    let fmt = |xs: &[usize]| format!("({})", xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(","));
    let rendered: String = gap_table(&ctx(3, 7))
        .iter()
        .map(|row| {
            format!(
                "{} {} {} {}\n",
                row.lambda,
                row.tilde,
                fmt(&row.gap.values()[1..row.gap.r()]),
                fmt(&row.weights)
            )
        })
        .collect();
    ensure(rendered == golden("gap_table_r3_n7.txt"), || format!("table differs:\n{rendered}"))?;
    Ok("10 rows".into())
}

fn criterion_9() -> Outcome {
    let mut count = 0;
    for r in 1..=3 {
        for n in (r + 1)..=6 {
            let small = ctx(r, n);
            let big = small.enlarged();
            let summed: SchubertClass = summed_m_class(small);
            for mu in big.partitions_of_size((r - 1) * (n - 1)) {
                let via = coeff_via_fill0(&mu, &big).unwrap();
                ensure(close(&via, &summed.coefficient(&mu)), || {
                    format!("{small}, {mu}: {via} vs {}", summed.coefficient(&mu))
                })?;
                count += 1;
            }
        }
    }
    for n in 1..=12 {
        for r in 0..=n {
            for l in 0..=r {
                ensure(binomial_identity_check(n, r, l), || format!("identity fails at n={n} r={r} l={l}"))?;
            }
        }
    }
    Ok(format!("{count} coefficients, identity for n <= 12"))
}

fn criterion_10() -> Outcome {
    let mut pairs = 0;
    for r in 1..=3 {
        for n in (r + 1)..=7 {
            let g = ctx(r, n);
            for mu in g.all_partitions() {
                let bar = complement(&mu, &g).unwrap();
                if bar.is_empty() {
                    // the empty tableau has no descents but no label either
                    ensure(syt_to_stripless(&Tableau::empty(), &g).is_err(), || format!("{g}: empty SYT accepted"))?;
                    continue;
                }
                let mut syts = 0;
                for t in enumerate_syt(&bar).filter(|t| descents(t).unwrap().len() + 1 == r) {
                    let back = syt_to_stripless(&t, &g).and_then(|s| stripless_to_syt(&s, &g));
                    ensure(back.as_ref() == Ok(&t), || format!("{g}: SYT round trip fails on\n{t}"))?;
                    syts += 1;
                }
                let mut ssyts = 0;
                for t in enumerate_ssyt(&mu, r).filter(|t| is_one_strip_less(t, g.width())) {
                    let back = stripless_to_syt(&t, &g).and_then(|s| syt_to_stripless(&s, &g));
                    ensure(back.as_ref() == Ok(&t), || format!("{g}: SSYT round trip fails on\n{t}"))?;
                    ssyts += 1;
                }
                ensure(syts == ssyts, || format!("{g}, {mu}: {syts} SYT vs {ssyts} SSYT"))?;
                pairs += syts;
            }
        }
    }
    let g = ctx(4, 14);
    let syt_text = golden("worked_example_syt.txt");
    let syt = parse_grid(&syt_text);
    let found: Vec<usize> = descents(&syt).unwrap().into_iter().collect();
    ensure(found == vec![4, 13, 22], || format!("descents {found:?}"))?;
    let blocks = syt_to_blocks(&syt, 4).map_err(|e| e.to_string())?;
    ensure(blocks.to_grid() == golden("worked_example_blocks.txt"), || format!("labels differ:\n{blocks}"))?;
    let out = syt_to_stripless(&syt, &g).map_err(|e| e.to_string())?;
    ensure(out.to_grid() == golden("worked_example_stripless.txt"), || format!("forward differs:\n{out}"))?;
    let back = stripless_to_syt(&out, &g).map_err(|e| e.to_string())?;
    ensure(back.to_grid() == syt_text, || format!("backward differs:\n{back}"))?;
    Ok(format!("{pairs} matched pairs, worked example exact"))
}

fn criterion_11() -> Outcome {
    // hook-content against enumeration
    let mut shapes = 0;
    for size in 0..=12 {
        for shape in Partition::all_in_box_of_size(size, size, size) {
            for k in 0..=6 {
                let enumerated = enumerate_ssyt(&shape, k).count();
                ensure(count_ssyt(&shape, k) == enumerated.into(), || format!("{shape} over {k}"))?;
            }
            shapes += 1;
        }
    }
    // inclusion-exclusion for 0-strip-less fillings
    for r in 1..=4 {
        for w in 1..=5 {
            for shape in Partition::all_in_box(r, w) {
                let formula = count_zero_strip_less_in(&shape, r, w);
                let direct = enumerate_ssyt(&shape, r).filter(|t| is_zero_strip_less(t, w)).count();
                ensure(close(&formula, &BigInt::from(direct)), || format!("{shape} in {r}x{w}"))?;
            }
        }
    }
    // Pieri against LR for single rows
    for (r, n) in [(2, 5), (3, 6), (3, 7), (4, 8)] {
        let g = ctx(r, n);
        for mu in g.all_partitions() {
            let a: SchubertClass = FormalClass::schubert(g, mu.clone()).unwrap();
            for k in 1..=g.width() {
                let row = FormalClass::schubert(g, p(&[k])).unwrap();
                classes_agree(&multiply(&a, &row).unwrap(), &pieri_multiply(&a, k).unwrap())?;
            }
        }
    }
    // LR symmetry
    let small = Partition::all_in_box(3, 3);
    for lambda in &small {
        for mu in &small {
            for nu in Partition::all_in_box_of_size(6, 6, lambda.size() + mu.size()) {
                let (x, y) = (lr_coefficient(lambda, mu, &nu).unwrap(), lr_coefficient(mu, lambda, &nu).unwrap());
                ensure(x == y, || format!("c^{nu}_{lambda},{mu}: {x} vs {y}"))?;
            }
        }
    }
    Ok(format!("{shapes} shapes up to 12 boxes"))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("Berget-Fink = Klyachko, 2<=r<=4, n<=9", criterion_1),
        ("Klyachko = 1-strip-less count and nonnegative", criterion_2),
        ("Gr(2,4) and Gr(2,5) closed answers", criterion_3),
        ("Mondrian closed formula = recursion, r<=4, n<=8", criterion_4),
        ("restricted Mondrian class = product, r<=3, n<=8", criterion_5),
        ("split products = strip tableau counts, r<=3, n<=6", criterion_6),
        ("refill golden example n=18, r=6", criterion_7),
        ("gap table for Gr(3,7)", criterion_8),
        ("summed Mondrian class = 0-strip-less sum; binomial identity", criterion_9),
        ("descent bijection round trips and worked example", criterion_10),
        ("hook-content, inclusion-exclusion, Pieri and LR oracles", criterion_11),
    ];
    let mut failed = Vec::new();
    println!();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        match result {
            Ok(detail) => println!("PASS {:>2} {name} ({detail})", i + 1),
            Err(why) => {
                println!("FAIL {:>2} {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
