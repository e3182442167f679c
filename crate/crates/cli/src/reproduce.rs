//! Built-in reproductions of the worked examples, each compared against
//! the published values.

use std::collections::BTreeSet;

use serde_json::json;

use gspace::action::{ConjugationI, ConjugationII, FiniteCarrier, Gl2};
use gspace::catalog;
use gspace::laws::{is_distributive_exhaustive, normalizer_criterion_matrix};
use gspace::orbit::{orbit_layers, orbits_intersect, Intersection};
use gspace::word::{growth_certificate, matrix_h, matrix_x, symbolic_layers};
use gspace::{DWord, FiniteGroup, Mat2, SubgroupPredicate};

use crate::error::CliError;
use crate::exec::{left_translation_entry, render_set};
use crate::report::{Entry, Report};

/// Identifiers accepted by [`reproduce`], with one-line descriptions.
pub const EXAMPLES: &[(&str, &str)] = &[
    ("borel-witness", "H(x,x) for the unitriangular subgroup of GL(2) is not bi-invariant"),
    ("orbit-intersection", "two orbits of a GL(2) action by {e, h} meet"),
    ("coset-orbits", "orbits of x h x^-1 y are the left cosets (--group, default S3)"),
    ("dihedral-layers", "strictly growing layers over two involutions (--depth, default 6)"),
    ("left-translation", "bi-invariant G(x,x) without distributivity (--group, default S3)"),
];

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub group: Option<String>,
    pub depth: Option<usize>,
}

pub fn reproduce(id: &str, options: &Options) -> Result<Report, CliError> {
    let group = || -> Result<FiniteGroup, CliError> {
        let name = options.group.as_deref().unwrap_or("S3");
        catalog::by_name(name).ok_or_else(|| CliError::Usage(format!("unknown catalog group {name:?}")))
    };
    let entries = match id {
        "borel-witness" => borel_witness()?,
        "orbit-intersection" => orbit_intersection()?,
        "coset-orbits" => coset_orbits(&group()?)?,
        "dihedral-layers" => dihedral_layers(options.depth.unwrap_or(6))?,
        "left-translation" => vec![left_translation_entry(&group()?)?],
        other => {
            let known: Vec<&str> = EXAMPLES.iter().map(|(k, _)| *k).collect();
            return Err(CliError::Usage(format!("unknown example {other:?}; known: {}", known.join(", "))));
        }
    };
    Ok(Report::new(format!("reproduce {id}"), entries))
}

fn borel_witness() -> Result<Vec<Entry>, CliError> {
    let x = Mat2::from_ints(0, 1, 1, 0);
    let h = Mat2::from_ints(1, 1, 0, 1);
    let conj = &(&x.inv()? * &h) * &x;
    let result = &(&conj.inv()? * &h) * &conj;
    let borel = SubgroupPredicate::UpperUnitriangular;

    let mut witness = Entry::new("conjugate");
    witness.line(format!("x = {x}, h = {h}"));
    witness.line(format!("x^-1 h x = {conj}"));
    witness.line(format!("(x^-1 h x)^-1 h (x^-1 h x) = {result}"));
    witness.check("x^-1 h x", "[[1,0],[1,1]]", &conj);
    witness.check("conjugate of h", "[[2,1],[-1,0]]", &result);
    witness.check("conjugate in H", false, borel.contains(&result));
    witness.data = json!({ "x": x, "h": h, "conjugated": conj, "result": result });

    let report = normalizer_criterion_matrix(&borel, &x)?;
    let mut criterion = Entry::new("normalizer_criterion");
    criterion.line(format!("H(x,x) bi-invariant: {}", report.bi_invariant));
    criterion.line(format!("x^-1 H x inside N(H): {}", report.condition));
    if let Some(e) = &report.escape {
        criterion.line(format!("h(h1(x,x), h2(x,x)) = {} for h = {}, h1 = {}, h2 = {}", e.value, e.h, e.h1, e.h2));
    }
    criterion.check("bi_invariant", false, report.bi_invariant);
    criterion.check("condition", false, report.condition);
    criterion.data = serde_json::to_value(&report).expect("report serializes");
    Ok(vec![witness, criterion])
}

fn orbit_intersection() -> Result<Vec<Entry>, CliError> {
    let h = Mat2::from_ints(0, 1, 1, 0);
    let x = Mat2::from_ints(0, -1, 1, -1);
    let action = ConjugationI::generated(Gl2, std::slice::from_ref(&h))?;
    let value = action.apply_member(&h, &x, &x)?;
    let orbit_h = orbit_layers(&action, &h, 4)?;
    let orbit_x = orbit_layers(&action, &x, 8)?;

    let mut entry = Entry::new("orbit_intersection");
    entry.line(format!("h = {h}, x = {x}, x^-1 = {}", x.inv()?));
    entry.line(format!("h(x, x) = x^-1 h x x = {value}"));
    entry.line(format!("[h] = {}", render_set(&action, orbit_h.last())));
    entry.line(format!("layer sizes of [x]: {:?}", orbit_x.sizes()));
    let expected_h: BTreeSet<Mat2> = [Mat2::identity(), h.clone()].into();
    entry.check("h(x, x)", &h, &value);
    entry.check("[h]", render_set(&action, &expected_h), render_set(&action, orbit_h.last()));
    entry.check("x in [h]", false, orbit_h.last().contains(&x));
    let witness = match orbits_intersect(&action, &x, &h, 8)? {
        Intersection::Witness { point } => point.to_string(),
        Intersection::Disjoint { .. } => "none".to_string(),
    };
    entry.check("witness", &h, &witness);
    entry.data = json!({ "h": h, "x": x, "value": value, "witness": witness });
    Ok(vec![entry])
}

fn coset_orbits(g: &FiniteGroup) -> Result<Vec<Entry>, CliError> {
    let mut entries = Vec::new();
    for h in g.all_subgroups() {
        let action = ConjugationII::<FiniteCarrier>::from_subgroup(g, &h)?;
        let distributive = is_distributive_exhaustive(&action)?;
        let cosets: BTreeSet<BTreeSet<usize>> =
            g.left_cosets(&h)?.into_iter().map(|c| c.into_iter().collect()).collect();
        let mut orbits = BTreeSet::new();
        for x in g.elements() {
            let layers = orbit_layers(&action, &x, g.order() + 1)?;
            orbits.insert(layers.last().clone());
        }
        let render = |sets: &BTreeSet<BTreeSet<usize>>| {
            sets.iter().map(|s| render_set(&action, s)).collect::<Vec<_>>().join(" ")
        };
        let mut entry = Entry::new("coset_orbits");
        entry.line(format!("H = {}", g.render_set(h.members())));
        entry.line(format!("orbits: {}", render(&orbits)));
        entry.check("distributive", "holds", if distributive.verdict.holds() { "holds" } else { "fails" });
        entry.check("orbits = left cosets", render(&cosets), render(&orbits));
        entry.data = json!({
            "subgroup": h.members().iter().map(|&k| g.name(k)).collect::<Vec<_>>(),
            "cosets": cosets.len(),
        });
        entries.push(entry);
    }
    Ok(entries)
}

fn dihedral_layers(depth: usize) -> Result<Vec<Entry>, CliError> {
    if depth < 2 {
        return Err(CliError::Usage("--depth must be at least 2".into()));
    }
    let layers = symbolic_layers(depth + 1)?;
    let show = |set: &BTreeSet<DWord>| {
        let items: Vec<String> = set.iter().map(DWord::to_string).collect();
        format!("{{{}}}", items.join(", "))
    };
    let expected = |words: &[&str]| -> BTreeSet<DWord> { words.iter().map(|w| w.parse().expect("literal")).collect() };

    let mut entry = Entry::new("dihedral_layers");
    entry.line(format!("h = {}, x = {}, xh = {}", matrix_h(), matrix_x(), &matrix_x() * &matrix_h()));
    entry.line(format!("H^1 = {}", show(&layers[0])));
    entry.line(format!("H^2 = {}", show(&layers[1])));
    entry.check("H^1", show(&expected(&["x", "xh"])), show(&layers[0]));
    entry.check("H^2", show(&expected(&["x", "xh", "h(xh)^2 x", "h(xh)^3"])), show(&layers[1]));
    for k in 1..=depth {
        let grows = layers[k - 1].is_subset(&layers[k]) && layers[k].len() > layers[k - 1].len();
        entry.check(format!("H^{} strictly contains H^{k}", k + 1), true, grows);
    }
    let sizes: Vec<usize> = layers.iter().map(BTreeSet::len).collect();
    entry.line(format!("sizes {sizes:?}"));

    let matrix_depth = depth.min(6);
    let action = ConjugationI::generated(Gl2, &[matrix_h()])?;
    let numeric = orbit_layers(&action, &matrix_x(), matrix_depth)?;
    let agree =
        layers.iter().zip(&numeric.layers).all(|(w, m)| &w.iter().map(DWord::to_matrix).collect::<BTreeSet<_>>() == m);
    entry.check(format!("matrix layers 1..={matrix_depth} agree"), true, agree);

    let cert = growth_certificate(depth)?;
    for step in &cert.steps {
        entry.line(format!(
            "k={}: y = {} of shape {}, h({}, y) = {} is new",
            step.k,
            step.y,
            step.form.label(),
            step.first,
            step.produced
        ));
    }
    entry.check("growth certificate", true, cert.is_valid());
    entry.data = json!({
        "sizes": sizes,
        "layer1": layers[0].iter().map(DWord::to_string).collect::<Vec<_>>(),
        "layer2": layers[1].iter().map(DWord::to_string).collect::<Vec<_>>(),
    });
    Ok(vec![entry])
}
