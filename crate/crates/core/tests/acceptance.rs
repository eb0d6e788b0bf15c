//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Every comparison is exact (integers and combinatorial keys); no tolerance applies.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use hypergraphic::geometry::{f_vector_of, is_simple_of, one_skeleton_of};
use hypergraphic::hopf::hyperforest_flat_coefficient;
use hypergraphic::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;

type Outcome = std::result::Result<String, String>;

fn lim() -> Limits {
    Limits::default()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Shared face enumerations for the corpus criteria.
struct Corpus {
    graphs: Vec<Hypergraph>,
    faces: Vec<Vec<FaceKey>>,
}

impl Corpus {
    fn build() -> Self {
        let graphs = corpus();
        let faces = graphs.iter().map(|g| enumerate_faces(g, &lim()).unwrap()).collect();
        Corpus { graphs, faces }
    }
}

fn criterion_1() -> Outcome {
    let g = make_hypergraph(4, &[vec![1, 2, 4], vec![2, 3, 4]]).unwrap();
    let all: Vec<Orientation> = orientations(&g).collect();
    ensure(all.len() == 36, || format!("{} orientations, expected 36", all.len()))?;
    let acyclic: BTreeSet<(Vec<u32>, Vec<u32>)> = all
        .iter()
        .filter(|o| is_acyclic(&g, o))
        .map(|o| (o.heads()[0].to_vec(), o.heads()[1].to_vec()))
        .collect();
    ensure(acyclic.len() == 20, || format!("{} acyclic, expected 20", acyclic.len()))?;
    // heads of ({1,2,4}, {2,3,4}) in the worked list of acyclic orientations
    let listed: [(&[u32], &[u32]); 20] = [
        (&[4], &[4]),
        (&[4], &[3]),
        (&[4], &[3, 4]),
        (&[2], &[3]),
        (&[2], &[2]),
        (&[2], &[2, 3]),
        (&[1], &[4]),
        (&[1], &[3]),
        (&[1], &[2]),
        (&[1], &[2, 3]),
        (&[1], &[2, 4]),
        (&[1], &[3, 4]),
        (&[1, 2], &[3]),
        (&[1, 2], &[2]),
        (&[1, 2], &[2, 3]),
        (&[1, 4], &[4]),
        (&[1, 4], &[3]),
        (&[1, 4], &[3, 4]),
        (&[2, 4], &[3]),
        (&[2, 4], &[2, 4]),
    ];
    let listed: BTreeSet<(Vec<u32>, Vec<u32>)> = listed.iter().map(|(a, b)| (a.to_vec(), b.to_vec())).collect();
    ensure(listed.len() == 20, || "transcribed list has duplicates".into())?;
    ensure(acyclic == listed, || {
        format!(
            "acyclic set differs: extra {:?}, missing {:?}",
            acyclic.difference(&listed).collect::<Vec<_>>(),
            listed.difference(&acyclic).collect::<Vec<_>>()
        )
    })?;
    Ok("36 orientations, 20 acyclic, matching the worked list".into())
}

fn criterion_2() -> Outcome {
    let fixtures: [(Hypergraph, Vec<Vec<usize>>, Vec<i64>); 2] = [
        (
            make_hypergraph(3, &[vec![1, 2, 3], vec![2, 3]]).unwrap(),
            vec![vec![0, 1], vec![1], vec![]],
            vec![-1, 2, -2],
        ),
        (
            make_hypergraph(4, &[vec![1, 2, 3], vec![3, 4]]).unwrap(),
            vec![vec![0, 1], vec![1], vec![0], vec![]],
            vec![-1, 0, 2, 0],
        ),
    ];
    for (g, flats, coefficients) in &fixtures {
        let engines = [
            ("takeuchi", takeuchi_antipode(g, &lim()).unwrap()),
            ("orientation", orientation_antipode(g, &lim()).unwrap()),
            ("faces", antipode_from_faces(g, &lim()).unwrap()),
        ];
        for (name, s) in &engines {
            let got: Vec<(Vec<usize>, i64)> = s.terms().iter().map(|(f, c)| (f.edges().to_vec(), *c)).collect();
            let want: Vec<(Vec<usize>, i64)> = flats.iter().cloned().zip(coefficients.iter().copied()).collect();
            ensure(got == want, || format!("{name} on {g}: got {got:?}, expected {want:?}"))?;
        }
    }
    Ok("(-1, 2, -2) and (-1, 0, 2, 0) from all three engines".into())
}

fn criterion_3(c: &Corpus) -> Outcome {
    for (g, faces) in c.graphs.iter().zip(&c.faces) {
        let t = takeuchi_antipode(g, &lim()).unwrap();
        let o = orientation_antipode(g, &lim()).unwrap();
        let f = antipode_from_faces(g, &lim()).unwrap();
        ensure(t == o, || format!("takeuchi != orientation on {g}"))?;
        ensure(t == f, || format!("takeuchi != faces on {g}"))?;
        let mut got: Vec<(Vec<usize>, i64)> = t.terms().iter().map(|(fl, c)| (fl.edges().to_vec(), *c)).collect();
        got.sort();
        if g.n() <= 4 {
            ensure(got == oracle_takeuchi(g), || format!("takeuchi differs from the test-side sum on {g}"))?;
        }
        ensure(!faces.is_empty(), || "no faces".into())?;
    }
    Ok(format!(
        "{} hypergraphs (2048 at n=4, 100 at n=5, 100 at n=6), three engines identical",
        c.graphs.len()
    ))
}

fn criterion_4(c: &Corpus) -> Outcome {
    let mut brute = 0;
    for (g, faces) in c.graphs.iter().zip(&c.faces) {
        let f = f_vector_of(g, faces);
        ensure(f.euler() == 1, || format!("Euler sum {} on {g}", f.euler()))?;
        if orientation_product(&edge_lists(g)) > 1_000_000 {
            continue;
        }
        brute += 1;
        let expected: usize = oracle_flats(g)
            .iter()
            .map(|flat| {
                let (blocks, images) = oracle_contract(g, flat);
                oracle_acyclic_block_counts(blocks, &images).len()
            })
            .sum();
        ensure(expected == faces.len(), || {
            format!("{} faces but {} acyclic orientations of contractions on {g}", faces.len(), expected)
        })?;
    }
    Ok(format!(
        "Euler sum 1 on all {}; face counts match brute force on {} with orientation product <= 10^6",
        c.graphs.len(),
        brute
    ))
}

fn criterion_5(c: &Corpus) -> Outcome {
    let mut total = 0;
    for (g, faces) in c.graphs.iter().zip(&c.faces) {
        for key in faces {
            let a = psi(g, key).map_err(|e| format!("psi failed on {g}: {e}"))?;
            ensure(omega(g, &a) == *key, || format!("omega(psi(key)) != key on {g}: {}", key.to_json()))?;
            total += 1;
        }
    }
    Ok(format!("omega(psi(key)) == key on {total} faces"))
}

fn criterion_6() -> Outcome {
    let mut specs = 0;
    for mask in 0u32..1 << 5 {
        let set: Vec<usize> = (2..=6).filter(|a| mask >> (a - 2) & 1 == 1).chain([7]).collect();
        let spec = PsSpec::new(7, set.clone()).unwrap();
        let closed = ps_f_vector(&spec).unwrap();
        let engine = f_vector(&ps_hypergraph(&spec), &lim()).unwrap();
        ensure(closed == engine, || format!("A = {set:?}: closed {closed:?}, engine {engine:?}"))?;
        specs += 1;
    }
    let spec = PsSpec::new(5, [3, 5]).unwrap();
    let want = [9u64, 18, 15, 6, 1];
    ensure(ps_f_vector(&spec).unwrap().counts() == want, || "(5, {3,5}) closed form".into())?;
    ensure(f_vector(&ps_hypergraph(&spec), &lim()).unwrap().counts() == want, || "(5, {3,5}) engine".into())?;
    for n in 2..=6usize {
        let spec = PsSpec::new(n, 2..=n).unwrap();
        let f = f_vector(&ps_hypergraph(&spec), &lim()).unwrap();
        let cube: Vec<u64> = (0..n)
            .map(|j| (1u64 << (n - 1 - j)) * binom(n as u64 - 1, j as u64))
            .collect();
        ensure(f.counts() == cube, || format!("n = {n}: {f:?} is not the cube {cube:?}"))?;
        let v = ps_volume(&spec).unwrap();
        ensure(v == (n as u64).pow(n as u32 - 2), || format!("n = {n}: volume {v}"))?;
    }
    let mut volumes = 0;
    for n in 2..=6usize {
        for mask in 0u32..1 << (n - 1) {
            let set: Vec<usize> = (1..n).filter(|a| mask >> (a - 1) & 1 == 1).chain([n]).collect();
            let spec = PsSpec::new(n, set.clone()).unwrap();
            let parking = ps_volume(&spec).unwrap();
            let draconian = normalized_volume(&ps_hypergraph(&spec)).unwrap();
            ensure(parking == draconian, || format!("(n, A) = ({n}, {set:?}): parking {parking}, draconian {draconian}"))?;
            volumes += 1;
        }
    }
    Ok(format!(
        "{specs} specs at n = 7 plus (5, {{3,5}}) agree; cube and n^(n-2) for n <= 6; {volumes} volume pairs agree"
    ))
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn criterion_7() -> Outcome {
    for (n, k) in [(3, 2), (4, 2), (4, 3), (5, 3), (5, 4)] {
        let closed = opp_f_vector(n, k, &lim()).unwrap();
        let engine = f_vector(&hyperperm_hypergraph(n, k).unwrap(), &lim()).unwrap();
        ensure(closed == engine, || format!("({n},{k}): OPP {closed:?}, engine {engine:?}"))?;
        let f0: u64 = (k as u64..=n as u64).product();
        ensure(engine.get(0) == f0, || format!("({n},{k}): f_0 = {}, expected {f0}", engine.get(0)))?;
    }
    let f = f_vector(&hyperperm_hypergraph(4, 2).unwrap(), &lim()).unwrap();
    ensure(f.counts() == [24, 36, 14, 1], || format!("permutohedron {f:?}"))?;
    Ok("OPP counts equal engine f-vectors on 5 cases; f_0 = n!/(k-1)!; (24,36,14,1)".into())
}

fn criterion_8(c: &Corpus) -> Outcome {
    for mask in 0u32..1 << 5 {
        let set: Vec<usize> = (2..=6).filter(|a| mask >> (a - 2) & 1 == 1).chain([7]).collect();
        let g = ps_hypergraph(&PsSpec::new(7, set.clone()).unwrap());
        ensure(is_simple(&g, &lim()).unwrap(), || format!("PS with A = {set:?} not simple"))?;
    }
    for n in 2..=6usize {
        for mask in 0u32..1 << (n - 1) {
            let set: Vec<usize> = (1..n).filter(|a| mask >> (a - 1) & 1 == 1).chain([n]).collect();
            let g = ps_hypergraph(&PsSpec::new(n, set.clone()).unwrap());
            ensure(is_simple(&g, &lim()).unwrap(), || format!("PS ({n}, {set:?}) not simple"))?;
        }
    }
    for (n, k) in [(3, 2), (4, 2), (4, 3), (5, 3), (5, 4)] {
        let g = hyperperm_hypergraph(n, k).unwrap();
        ensure(is_simple(&g, &lim()).unwrap(), || format!("hyper-permutahedron ({n},{k}) not simple"))?;
    }
    let square = make_hypergraph(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]]).unwrap();
    ensure(!is_simple(&square, &lim()).unwrap(), || "4-cycle reported simple".into())?;
    let mut building = 0;
    let mut simple = 0;
    for (g, faces) in c.graphs.iter().zip(&c.faces) {
        let s = is_simple_of(g, faces).unwrap();
        if is_building_set(g) {
            building += 1;
            ensure(s, || format!("building set {g} not simple"))?;
        }
        let skeleton = one_skeleton_of(g, faces).map_err(|e| format!("{g}: {e}"))?;
        let regular = skeleton.is_regular(polytope_dim(g));
        ensure(s == regular, || format!("{g}: simple = {s}, skeleton regular = {regular}"))?;
        simple += s as usize;
    }
    Ok(format!(
        "PS and hyper-permutahedra simple, 4-cycle not; {building} building sets simple; \
         simplicity equals skeleton regularity on {} ({simple} simple)",
        c.graphs.len()
    ))
}

fn criterion_9() -> Outcome {
    for (p, m) in [(3u64, 2usize), (3, 3)] {
        ensure(ps_mod_p_check(p, m).unwrap(), || format!("ps_mod_p_check({p}, {m}) is false"))?;
        let spec = PsSpec::uniform(p as usize - 1, m).unwrap();
        let f = f_vector(&ps_hypergraph(&spec), &lim()).unwrap();
        let top = m * (p as usize - 1);
        ensure(f.dim() == Some(top), || format!("dimension {:?}", f.dim()))?;
        for j in 0..top {
            ensure(f.get(j).is_multiple_of(p), || format!("p = {p}, m = {m}: f_{j} = {} not divisible", f.get(j)))?;
        }
    }
    Ok("(3,2): f = (9,18,15,6,1) and (3,3) divisible entrywise by 3".into())
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xf0_2e57);
    let mut coefficients = 0;
    for _ in 0..50 {
        let g = random_hyperforest(&mut rng, 7);
        ensure(!has_proper_cycle(&g), || format!("generator produced a proper cycle in {g}"))?;
        ensure(is_hyperforest(&g), || format!("{g} not recognized as a hyperforest"))?;
        let s = takeuchi_antipode(&g, &lim()).unwrap();
        for (flat, c) in s.terms() {
            let expected = hyperforest_flat_coefficient(&g, flat).unwrap();
            ensure(expected == *c, || {
                format!("{g}, flat {:?}: coefficient {c}, closed form {expected}", flat.edges().to_vec())
            })?;
            coefficients += 1;
        }
        let product = g
            .edges()
            .iter()
            .fold(FVector::new(vec![1]), |acc, e| acc.product(&FVector::simplex(e.len())));
        let f = f_vector(&g, &lim()).unwrap();
        ensure(f == product, || format!("{g}: f-vector {f:?}, simplex product {product:?}"))?;
    }
    Ok(format!("50 hyperforests, {coefficients} coefficients and 50 f-polynomials match"))
}

fn main() {
    let started = Instant::now();
    let mut failed = 0;
    let mut report = |n: usize, name: &str, run: &dyn Fn() -> Outcome| {
        let t = Instant::now();
        let outcome = match catch_unwind(AssertUnwindSafe(run)) {
            Ok(o) => o,
            Err(panic) => Err(panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into())),
        };
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] criterion {n:>2}: {name}: {detail} ({secs:.1}s)"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] criterion {n:>2}: {name}: {detail} ({secs:.1}s)");
            }
        }
    };

    report(1, "orientation counts", &criterion_1);
    report(2, "antipode fixtures", &criterion_2);
    let corpus = Corpus::build();
    report(3, "exhaustive oracle equivalence", &|| criterion_3(&corpus));
    report(4, "Euler property and face counts", &|| criterion_4(&corpus));
    report(5, "omega-psi identity", &|| criterion_5(&corpus));
    report(6, "Pitman-Stanley", &criterion_6);
    report(7, "hyper-permutahedra", &criterion_7);
    report(8, "simplicity", &|| criterion_8(&corpus));
    report(9, "mod-p divisibility", &criterion_9);
    report(10, "hyperforests", &criterion_10);

    println!(
        "acceptance: {} of 10 criteria passed in {:.1}s",
        10 - failed,
        started.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
