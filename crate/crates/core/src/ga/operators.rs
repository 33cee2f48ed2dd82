use rand::seq::index;
use rand::Rng;

use crate::boolean::TruthTable;
use crate::Result;

/// Index of the fittest (lowest fitness) of `k` distinct, uniformly drawn
/// individuals. Ties go to the lowest population index.
pub fn tournament_select<R: Rng + ?Sized>(fitnesses: &[f64], k: usize, rng: &mut R) -> usize {
    assert!(
        k >= 1 && k <= fitnesses.len(),
        "tournament size {k} outside 1..={}",
        fitnesses.len()
    );
    index::sample(rng, fitnesses.len(), k)
        .into_iter()
        .min_by(|&i, &j| fitnesses[i].total_cmp(&fitnesses[j]).then(i.cmp(&j)))
        .expect("k >= 1")
}

/// With probability `p_c`, swaps the suffixes `[c, 2^n)` at a cut `c` drawn
/// uniformly from `1..2^n`; otherwise returns copies of the parents.
pub fn crossover_single_point<R: Rng + ?Sized>(
    a: &TruthTable,
    b: &TruthTable,
    p_c: f64,
    rng: &mut R,
) -> Result<(TruthTable, TruthTable)> {
    a.same_arity(b)?;
    let (mut c, mut d) = (a.clone(), b.clone());
    if rng.random_bool(p_c) {
        let cut = rng.random_range(1..a.len());
        c.swap_suffix(&mut d, cut)?;
    }
    Ok((c, d))
}

/// With probability `p_m`, flips one uniformly chosen entry.
pub fn mutate_bitflip<R: Rng + ?Sized>(f: &TruthTable, p_m: f64, rng: &mut R) -> TruthTable {
    let mut out = f.clone();
    if rng.random_bool(p_m) {
        out.flip(rng.random_range(0..f.len()));
    }
    out
}

/// Replaces the worst offspring (highest fitness, lowest index on ties) with
/// the elite.
pub fn apply_elitism(
    offspring: &mut [TruthTable],
    fitnesses: &mut [f64],
    elite: TruthTable,
    elite_fitness: f64,
) {
    assert_eq!(offspring.len(), fitnesses.len());
    let worst = fitnesses
        .iter()
        .enumerate()
        .max_by(|(i, x), (j, y)| x.total_cmp(y).then(j.cmp(i)))
        .map(|(i, _)| i)
        .expect("non-empty population");
    offspring[worst] = elite;
    fitnesses[worst] = elite_fitness;
}
