use ncga::fixtures;
use ncga::gbasis::{complete, find_ambiguities};
use ncga::rat::rat;
use std::time::Instant;

fn main() {
    let pres = fixtures::sklyanin(rat(2), rat(3), rat(5));
    for d in [11usize, 12] {
        let t = Instant::now();
        let gb = complete(&pres, d).unwrap();
        let ambs = find_ambiguities(&gb.rules, &pres.gens, &pres.order);
        let ambs_in: usize = ambs.iter().filter(|a| a.witness.degree(&pres.gens) <= d).count();
        // biggest coefficient (digits of numerator) across tails
        let mut maxdigits = 0;
        let mut terms_total = 0;
        for r in &gb.rules {
            for (_, c) in r.tail.terms() {
                terms_total += 1;
                let nd = c.numer().to_string().len().max(c.denom().to_string().len());
                maxdigits = maxdigits.max(nd);
            }
        }
        println!(
            "D={d}: rules={} ambs_total={} ambs<=D={} tail_terms={} max_coeff_digits={} elapsed={:?}",
            gb.rules.len(), ambs.len(), ambs_in, terms_total, maxdigits, t.elapsed()
        );
    }
}
