use schreier_core::suites::{run, SuiteConfig};
use std::time::Instant;

fn main() {
    let cfg = SuiteConfig { jobs: 4, ..SuiteConfig::default() };
    for name in ["norm-oracle", "norm-attainment", "norm-axioms", "diagonal-isometry",
                 "l1", "imp", "fact1", "l3-witness", "fact4-witness", "tingley-roundtrip",
                 "one-sets", "lemma7", "lemma20", "lemma23", "lemma1-p1"] {
        let t = Instant::now();
        let r = run(name, &cfg).unwrap();
        println!("{name}: cases={} ok={} in {:.2?}", r.cases, r.ok, t.elapsed());
        if !r.ok {
            for v in r.violations.iter().take(3) { println!("   {v}"); }
        }
    }
}
