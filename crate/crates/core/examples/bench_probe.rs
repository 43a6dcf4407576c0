//! Rough timings for the heavy kernels; not part of the test suite.

use std::time::Instant;

use startrans_core::*;

fn main() {
    // a complete ideal with infinitely many base points
    let mut raw: Vec<Vec<u32>> = vec![vec![12, 0, 0], vec![0, 7, 5]];
    for a in 0..=13u32 {
        for b in 0..=13 - a {
            raw.push(vec![a, b, 13 - a - b]);
        }
    }
    let i0 = MonomialIdeal::from_exponents(3, raw).unwrap();
    let t = Instant::now();
    let complete = is_complete(&i0).unwrap();
    println!("is_complete(I0) = {complete}  [{:?}]", t.elapsed());

    let t = Instant::now();
    let rees = rees_valuations(&i0).unwrap();
    println!(
        "rees(I0) = {:?}  [{:?}]",
        rees.iter()
            .map(|w| w.weights().to_vec())
            .collect::<Vec<_>>(),
        t.elapsed()
    );

    let m = MonomialIdeal::maximal(3).unwrap();
    let t = Instant::now();
    let mi0 = m.product(&i0).unwrap();
    let j = integral_closure(&mi0).unwrap();
    println!(
        "closure(m*I0): mu = {} [{:?}]; complete(m*I0) = {}",
        j.mu(),
        t.elapsed(),
        j == mi0
    );

    // alternating chains
    for len in [6usize, 7, 8] {
        let dirs: Vec<usize> = (0..len).map(|i| i % 2).collect();
        let seq = DirectionSequence::new(3, dirs).unwrap();
        let t = Instant::now();
        let p = special_p(&seq).unwrap();
        println!(
            "special_p(alt len {len}): ord {} mu {}  [{:?}]",
            p.ord(),
            p.mu(),
            t.elapsed()
        );
        let t = Instant::now();
        let basis = point_basis(&p, 12).unwrap();
        let orders: Vec<u64> = basis.values().copied().collect();
        println!("  point basis {:?}  [{:?}]", orders, t.elapsed());
    }

    // a depth-four mixed-direction chain
    let seq = DirectionSequence::new(3, vec![0, 1, 1, 2]).unwrap();
    let t = Instant::now();
    let chain = special_p_chain(&seq).unwrap();
    println!(
        "depth-4 chain mus: {:?}  [{:?}]",
        chain.iter().map(MonomialIdeal::mu).collect::<Vec<_>>(),
        t.elapsed()
    );
    let t = Instant::now();
    let rees = rees_valuations(&chain[0]).unwrap();
    println!(
        "rees(K) = {:?}  [{:?}]",
        rees.iter()
            .map(|w| w.weights().to_vec())
            .collect::<Vec<_>>(),
        t.elapsed()
    );

    // d = 4 closure of a random-ish ideal
    let i4 = MonomialIdeal::from_exponents(
        4,
        vec![
            vec![6, 0, 0, 0],
            vec![0, 5, 0, 0],
            vec![0, 0, 6, 0],
            vec![0, 0, 0, 4],
            vec![2, 1, 0, 1],
            vec![1, 3, 2, 0],
        ],
    )
    .unwrap();
    let t = Instant::now();
    let c = integral_closure(&i4).unwrap();
    println!("d=4 closure: mu {}  [{:?}]", c.mu(), t.elapsed());
    let t = Instant::now();
    let r = rees_valuations(&i4).unwrap();
    println!("d=4 rees: {} facets  [{:?}]", r.len(), t.elapsed());
}
