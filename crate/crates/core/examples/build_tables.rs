//! Builds the multiplication tables up to a given rank and checks all relations.
use qbrauer::qbrauer::QBrauer;
use std::time::Instant;

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    for n in 0..=max {
        let t = Instant::now();
        let b = QBrauer::new(n).expect("table build");
        let built = t.elapsed();
        b.check_word_consistency().expect("word letters");
        let bad: Vec<_> = b.verify_relations().into_iter().filter(|r| !r.holds).collect();
        println!("n={n} dim={} build={built:?} total={:?} failing={bad:?}", b.dim(), t.elapsed());
    }
}
