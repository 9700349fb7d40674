//! Standard small presentations used across tests, benchmarks and docs.

use crate::freealg::{FreePoly, GeneratorSet, OrderSpec, Presentation, Word};
use crate::rat::{rat, Rat};

/// Build a polynomial from (coefficient, word-in-single-letter-names) pairs.
pub fn poly(gens: &GeneratorSet, terms: &[(Rat, &str)]) -> FreePoly {
    FreePoly::from_terms(terms.iter().map(|(c, word)| {
        let letters: Vec<usize> = word
            .chars()
            .map(|ch| {
                gens.index_of(&ch.to_string())
                    .unwrap_or_else(|| panic!("unknown generator {ch}"))
            })
            .collect();
        (Word::from_letters(&letters), c.clone())
    }))
}

fn pres(names: &[&str], rels: &[Vec<(Rat, &str)>], name: &str) -> Presentation {
    let gens = GeneratorSet::standard(names);
    let order = OrderSpec::declaration(&gens);
    let relations = rels.iter().map(|r| poly(&gens, r)).collect();
    Presentation::new(gens, order, relations, name).expect("valid fixture")
}

/// The free algebra on `n` weight-1 generators (no relations).
pub fn free_algebra(n: usize) -> Presentation {
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    pres(&refs, &[], "free")
}

/// Quantum plane: yx - q xy, order x < y.
pub fn quantum_plane(q: Rat) -> Presentation {
    pres(&["x", "y"], &[vec![(rat(1), "yx"), (-q, "xy")]], "quantum_plane")
}

/// Jordan plane: yx - xy - x^2, order x < y.
pub fn jordan_plane() -> Presentation {
    pres(
        &["x", "y"],
        &[vec![(rat(1), "yx"), (rat(-1), "xy"), (rat(-1), "xx")]],
        "jordan_plane",
    )
}

/// Jordan plane with the reversed variable order y < x, under which the
/// completion never terminates.
pub fn jordan_plane_yx() -> Presentation {
    let gens = GeneratorSet::standard(&["x", "y"]);
    let order = OrderSpec::deglex(&[1, 0], &gens).unwrap();
    let rel = poly(&gens, &[(rat(1), "yx"), (rat(-1), "xy"), (rat(-1), "xx")]);
    Presentation::new(gens, order, vec![rel], "jordan_plane_yx").unwrap()
}

/// Quantum polynomial ring in three variables, relations listed as
/// zy - r yz, xz - q zx, yx - p xy; order x < y < z.
pub fn quantum_poly3(p: Rat, q: Rat, r: Rat) -> Presentation {
    pres(
        &["x", "y", "z"],
        &[
            vec![(rat(1), "zy"), (-r, "yz")],
            vec![(rat(1), "xz"), (-q, "zx")],
            vec![(rat(1), "yx"), (-p, "xy")],
        ],
        "quantum_poly3",
    )
}

/// Quantum polynomial ring in the rule-oriented parametrization: relations
/// yx - p xy, zx - q xz, zy - r yz (already monic); order x < y < z.
pub fn quantum_poly3_rules(p: Rat, q: Rat, r: Rat) -> Presentation {
    pres(
        &["x", "y", "z"],
        &[
            vec![(rat(1), "yx"), (-p, "xy")],
            vec![(rat(1), "zx"), (-q, "xz")],
            vec![(rat(1), "zy"), (-r, "yz")],
        ],
        "quantum_poly3_rules",
    )
}

/// Sklyanin algebra S(a, b, c): relations
/// a zy + b yz + c x^2, a xz + b zx + c y^2, a yx + b xy + c z^2.
pub fn sklyanin(a: Rat, b: Rat, c: Rat) -> Presentation {
    pres(
        &["x", "y", "z"],
        &[
            vec![(a.clone(), "zy"), (b.clone(), "yz"), (c.clone(), "xx")],
            vec![(a.clone(), "xz"), (b.clone(), "zx"), (c.clone(), "yy")],
            vec![(a, "yx"), (b, "xy"), (c, "zz")],
        ],
        "sklyanin",
    )
}

/// The cubic algebra k<x,y>/(yx^2 - x^2y, y^2x - xy^2).
pub fn cubic_two_gen() -> Presentation {
    pres(
        &["x", "y"],
        &[
            vec![(rat(1), "yxx"), (rat(-1), "xxy")],
            vec![(rat(1), "yyx"), (rat(-1), "xyy")],
        ],
        "cubic",
    )
}

/// k<x,y,z>/(z^2 - xy - yx, zx - xz, zy - yz): completion adds two rules.
pub fn finite_process() -> Presentation {
    pres(
        &["x", "y", "z"],
        &[
            vec![(rat(1), "zz"), (rat(-1), "xy"), (rat(-1), "yx")],
            vec![(rat(1), "zx"), (rat(-1), "xz")],
            vec![(rat(1), "zy"), (rat(-1), "yz")],
        ],
        "finite_process",
    )
}

/// k<x,y>/(yx): finite global dimension but not Gorenstein.
pub fn monomial_yx() -> Presentation {
    pres(&["x", "y"], &[vec![(rat(1), "yx")]], "monomial_yx")
}

/// k<x,y>/(x^2): exponential growth, infinite global dimension.
pub fn x_squared() -> Presentation {
    pres(&["x", "y"], &[vec![(rat(1), "xx")]], "x_squared")
}

/// Enveloping algebra of the Heisenberg Lie algebra, minimal two-generator
/// cubic form: yx^2 - 2xyx + x^2y, y^2x - 2yxy + xy^2.
pub fn heisenberg_cubic() -> Presentation {
    pres(
        &["x", "y"],
        &[
            vec![(rat(1), "yxx"), (rat(-2), "xyx"), (rat(1), "xxy")],
            vec![(rat(1), "yyx"), (rat(-2), "yxy"), (rat(1), "xyy")],
        ],
        "heisenberg_cubic",
    )
}

/// Three-generator quadratic family with parameters a, b:
/// zy + (1/b)x^2 - (a/b)yz, zx - (b/a)xz - (1/a)y^2, yx - (a/b)xy.
pub fn quadratic_reg3(a: Rat, b: Rat) -> Presentation {
    let inv_a = rat(1) / a.clone();
    let inv_b = rat(1) / b.clone();
    let ab = a.clone() / b.clone();
    let ba = b / a;
    pres(
        &["x", "y", "z"],
        &[
            vec![(rat(1), "zy"), (inv_b, "xx"), (-ab.clone(), "yz")],
            vec![(rat(1), "zx"), (-ba, "xz"), (-inv_a, "yy")],
            vec![(rat(1), "yx"), (-ab, "xy")],
        ],
        "quadratic_reg3",
    )
}

/// k<x,y,z>/(zx + xz, yz + zy, z^2 - x^2 - y^2): finite completion with
/// polynomial-ring dimensions.
pub fn anticommuting_z() -> Presentation {
    pres(
        &["x", "y", "z"],
        &[
            vec![(rat(1), "zx"), (rat(1), "xz")],
            vec![(rat(1), "yz"), (rat(1), "zy")],
            vec![(rat(1), "zz"), (rat(-1), "xx"), (rat(-1), "yy")],
        ],
        "anticommuting_z",
    )
}

/// Commutative polynomial ring on the given single-letter names.
pub fn commutative(names: &[&str]) -> Presentation {
    let gens = GeneratorSet::standard(names);
    let order = OrderSpec::declaration(&gens);
    let mut rels = Vec::new();
    for j in 0..names.len() {
        for i in 0..j {
            rels.push(FreePoly::from_terms([
                (Word::from_letters(&[j, i]), rat(1)),
                (Word::from_letters(&[i, j]), rat(-1)),
            ]));
        }
    }
    Presentation::new(gens, order, rels, "commutative").unwrap()
}
