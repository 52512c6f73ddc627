use std::time::Instant;

use rq_core::freealg::{Letter, NcPoly, Word};
use rq_core::rqalg::{presentation, Presentation};
use rq_core::QRat;

#[test]
fn timing() {
    let s = presentation(Presentation::S);
    for n in 1..=8u32 {
        let t = Instant::now();
        let w = Word::from_powers(&[(Letter::A, n), (Letter::B, n)]);
        let (nf, steps) = s.normalize_counted(&NcPoly::<QRat>::from_word(w));
        println!(
            "S: n={} steps={} terms={} in {:?}",
            n,
            steps,
            nf.value.num_terms(),
            t.elapsed()
        );
    }
    let r = presentation(Presentation::R);
    for n in 1..=8u32 {
        let t = Instant::now();
        let w = Word::from_powers(&[(Letter::A, n), (Letter::B, n)]);
        let (nf, steps) = r.normalize_counted(&NcPoly::<QRat>::from_word(w));
        println!(
            "R: n={} steps={} terms={} in {:?}",
            n,
            steps,
            nf.value.num_terms(),
            t.elapsed()
        );
    }
}
