use std::path::Path;

use serde_json::json;

use preadm::coset::{verify_equivalence_condition, Scope};
use preadm::gassmann::gassmann_equivalent;
use preadm::group::{EnumerationOptions, PermGroup};
use preadm::groupfile::{parse_generator_list, GroupSpec};
use preadm::padic::{
    completions_of_k, completions_of_l, preadmissibility_witness_compare, verify_factorizations,
    AbelianPGroupShape, LocalFieldDescriptor,
};
use preadm::perm::Permutation;
use preadm::wreath::{sylow_generators, threshold_inequality};

use crate::report::{CliError, Outcome};

fn strings(ps: &[Permutation]) -> Vec<String> {
    ps.iter().map(ToString::to_string).collect()
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn load_group(path: &Path, cap: usize) -> Result<(GroupSpec, PermGroup), CliError> {
    let spec = GroupSpec::parse(&read(path)?)?;
    let g = spec.generate_capped(cap)?;
    Ok((spec, g))
}

pub fn sylow(l: u32, n: u32, out: Option<&Path>, cap: usize) -> Result<Outcome, CliError> {
    let w = sylow_generators(l, n)?;
    let order = w.expected_order();
    let materialized = match w.group(cap) {
        Ok(g) => Some(g),
        Err(preadm::Error::CapExceeded { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    if let Some(g) = &materialized {
        assert_eq!(g.order().to_string(), order.to_string());
    }
    if let Some(path) = out {
        let mut text = format!("# Sylow {l}-subgroup of S_{}\ndegree {}\n", w.degree(), w.degree());
        for a in &w.alphas {
            text.push_str(&a.to_string());
            text.push('\n');
        }
        std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    }
    let result = json!({
        "l": l,
        "n": n,
        "degree": w.degree(),
        "generators": strings(&w.alphas),
        "order": order.to_string(),
        "order_exponent": w.order_exponent(),
        "materialized": materialized.is_some(),
        "max_element_order": materialized.as_ref().map(|g| g.max_element_order()),
        "beta_set_size": w.degree() / l as usize,
        "threshold_inequality": (n >= 2).then(|| threshold_inequality(l, n)),
        "out": out.map(|p| p.display().to_string()),
    });
    Ok(Outcome::new(json!({ "l": l, "n": n }), result, true))
}

pub fn verify_equivalence(
    group: &Path,
    subgroup: &str,
    scope: &str,
    conjugacy_reps: bool,
    cap: usize,
) -> Result<Outcome, CliError> {
    let scope: Scope = scope.parse()?;
    let (spec, g) = load_group(group, cap)?;
    let gens = parse_generator_list(subgroup, g.degree())?;
    let h = g.subgroup_from_perms(&gens)?;
    let opts = EnumerationOptions {
        conjugacy_reps,
        ..Default::default()
    };
    let verdict = verify_equivalence_condition(&g, &h, scope, opts)?;
    let inputs = json!({
        "group": group.display().to_string(),
        "degree": spec.degree,
        "generators": strings(&spec.generators),
        "group_order": g.order(),
        "subgroup": strings(&gens),
        "subgroup_order": h.order(),
        "scope": scope,
        "conjugacy_reps": conjugacy_reps,
    });
    let pass = verdict.pass;
    Ok(Outcome::new(inputs, verdict, pass))
}

pub fn gassmann(group: &Path, h: &str, h2: &str, cap: usize) -> Result<Outcome, CliError> {
    let (spec, g) = load_group(group, cap)?;
    let gens = parse_generator_list(h, g.degree())?;
    let gens2 = parse_generator_list(h2, g.degree())?;
    let sub = g.subgroup_from_perms(&gens)?;
    let sub2 = g.subgroup_from_perms(&gens2)?;
    let report = gassmann_equivalent(&sub, &sub2);
    let inputs = json!({
        "group": group.display().to_string(),
        "degree": spec.degree,
        "generators": strings(&spec.generators),
        "group_order": g.order(),
        "h": strings(&gens),
        "h_order": sub.order(),
        "h2": strings(&gens2),
        "h2_order": sub2.order(),
    });
    Ok(Outcome::new(inputs, report, true))
}

/// Parses `16^10`, `16,16,2` or `16^9,2` into a shape.
pub fn parse_shape(text: &str) -> Result<AbelianPGroupShape, CliError> {
    let bad = || CliError::Malformed(format!("invalid abelian group shape {text:?}"));
    let mut factors = Vec::new();
    for term in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (base, count) = match term.split_once('^') {
            Some((b, c)) => (b.trim(), c.trim().parse::<usize>().map_err(|_| bad())?),
            None => (term, 1),
        };
        let base: u64 = base.parse().map_err(|_| bad())?;
        factors.extend(std::iter::repeat_n(base, count));
    }
    Ok(AbelianPGroupShape::new(factors)?)
}

fn load_descriptors(path: Option<&Path>, default: Vec<LocalFieldDescriptor>) -> Result<Vec<LocalFieldDescriptor>, CliError> {
    let Some(path) = path else {
        return Ok(default);
    };
    let text = read(path)?;
    let data: Vec<LocalFieldDescriptor> = serde_json::from_str(&text)
        .map_err(|e| CliError::Malformed(format!("{}: {e}", path.display())))?;
    for d in &data {
        d.validate()?;
    }
    Ok(data)
}

pub fn padic_verify(
    m: i128,
    precision: u32,
    k_data: Option<&Path>,
    l_data: Option<&Path>,
    exponent: u64,
    target: &str,
) -> Result<Outcome, CliError> {
    let factorization = verify_factorizations(m, precision)?;
    let k = load_descriptors(k_data, completions_of_k())?;
    let l = load_descriptors(l_data, completions_of_l())?;
    let a = parse_shape(target)?;
    let witness = preadmissibility_witness_compare(&k, &l, &a, exponent)?;
    let pass = factorization.first && factorization.second;
    let inputs = json!({
        "m": m.to_string(),
        "precision": precision,
        "exponent": exponent,
        "target": a.to_string(),
        "k_data": k,
        "l_data": l,
    });
    Ok(Outcome::new(
        inputs,
        json!({ "factorization": factorization, "witness": witness }),
        pass,
    ))
}
