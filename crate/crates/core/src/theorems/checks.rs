use std::collections::BTreeSet;

use crate::arith::{gcd, is_prime_power, prime_divisors, PrimePower};
use crate::classes::ClassData;
use crate::error::Result;
use crate::graph::CDGraph;
use crate::group::{FiniteGroup, IDENTITY};
use crate::subgroup::Subgroup;

use super::frobenius::quasi_frobenius_data;
use super::{CheckOptions, CrossPrimeScenario, StatementId, Status, VerificationOutcome, Witness};

/// For regular Γ_G(N): if `y = x^a` is noncentral then `|y^G| = |x^G|` or the
/// two sizes are partner vertices.
pub fn check_element_power_lemma(cd: &ClassData, _opts: &CheckOptions) -> VerificationOutcome {
    const ID: StatementId = StatementId::ElementPowerLemma;
    let graph = cd.graph();
    if !graph.is_regular() {
        return VerificationOutcome::vacuous(ID, "graph is not regular");
    }
    let g = cd.group();
    let mut instances = 0u64;
    for x in cd.noncentral_elements() {
        let size_x = cd.class_size(x).expect("x in N");
        let mut y = IDENTITY;
        for exponent in 0..cd.element_order(x) as u64 {
            if exponent > 0 {
                y = g.mul(y, x);
            }
            if !cd.is_noncentral(y) {
                continue;
            }
            instances += 1;
            let size_y = cd.class_size(y).expect("y in N");
            if size_x != size_y && !graph.are_partners(size_x, size_y).expect("vertices") {
                return VerificationOutcome::new(
                    ID,
                    false,
                    Witness::ElementPower {
                        x,
                        exponent,
                        y,
                        size_x,
                        size_y,
                        neighborhood_x: graph.closed_neighborhood(size_x).expect("vertex"),
                        neighborhood_y: graph.closed_neighborhood(size_y).expect("vertex"),
                    },
                    "power of x has a different class size that is not a partner",
                );
            }
        }
    }
    if instances == 0 {
        return VerificationOutcome::vacuous(ID, "no noncentral elements in N");
    }
    VerificationOutcome::new(ID, true, Witness::Checked { instances }, "")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaKeyOutcome {
    pub part_a: VerificationOutcome,
    pub part_b: VerificationOutcome,
}

fn scenario(cd: &ClassData, p1: u64, p2: u64, x0: usize, y0: usize) -> CrossPrimeScenario {
    let size = |e| cd.class_size(e).expect("element of N");
    CrossPrimeScenario {
        p1,
        p2,
        x0,
        y0,
        v0: size(x0),
        w0: size(y0),
        z0: size(cd.group().mul(x0, y0)),
        v1: None,
        w1: None,
    }
}

/// Every cross-prime scenario: primes `p1 ≠ p2` dividing |N/(N∩Z(G))| and a
/// commuting pair of noncentral `p1`- and `p2`-elements.
fn scenarios(cd: &ClassData) -> Vec<CrossPrimeScenario> {
    let primes = prime_divisors(cd.central_quotient_order());
    let mut out = Vec::new();
    for p1 in primes.iter() {
        for p2 in primes.iter().filter(|&p2| p2 != p1) {
            for (x0, y0) in cd.commuting_cross_prime_pairs(p1, p2) {
                out.push(scenario(cd, p1, p2, x0, y0));
            }
        }
    }
    out
}

fn first_scenario(cd: &ClassData) -> Option<CrossPrimeScenario> {
    let primes = prime_divisors(cd.central_quotient_order());
    for p1 in primes.iter() {
        for p2 in primes.iter().filter(|&p2| p2 != p1) {
            if let Some((x0, y0)) = cd.commuting_cross_prime_pair(p1, p2) {
                return Some(scenario(cd, p1, p2, x0, y0));
            }
        }
    }
    None
}

/// Class sizes of noncentral `p`-elements whose gcd with `p1·p2` is exactly `want`.
fn realized_sizes(cd: &ClassData, p: u64, p1p2: u64, want: u64) -> BTreeSet<u64> {
    cd.p_elements(p, true)
        .into_iter()
        .filter_map(|x| cd.class_size(x))
        .filter(|&s| gcd(s, p1p2) == want)
        .collect()
}

/// Looks for non-adjacent `v1, w1` in the closed neighborhood of `z0`, realized
/// by a noncentral `p1`-element and a noncentral `p2`-element, with
/// `gcd(v1, p1p2) = p2` and `gcd(w1, p1p2) = p1`.
fn find_part_a(cd: &ClassData, graph: &CDGraph, s: &CrossPrimeScenario) -> Option<(u64, u64)> {
    let p1p2 = s.p1 * s.p2;
    let hood = graph.closed_neighborhood(s.z0).ok()?;
    let vs = realized_sizes(cd, s.p1, p1p2, s.p2);
    let ws = realized_sizes(cd, s.p2, p1p2, s.p1);
    for &v1 in vs.iter().filter(|v| hood.contains(v)) {
        for &w1 in ws.iter().filter(|w| hood.contains(w)) {
            if !graph.adjacent(v1, w1).ok()? {
                return Some((v1, w1));
            }
        }
    }
    None
}

fn part_b_holds(s: &CrossPrimeScenario) -> bool {
    s.v0 % s.p2 == 0 && s.w0 % s.p1 == 0 && s.z0 % (s.p1 * s.p2) == 0
}

/// Both parts of the cross-prime lemma, checked over every scenario when
/// Γ_G(N) is connected, incomplete and regular.
pub fn check_lemma_key(cd: &ClassData, opts: &CheckOptions) -> LemmaKeyOutcome {
    use StatementId::{LemmaKeyA, LemmaKeyB};
    let graph = cd.graph();
    let vacuous = |reason: &str| LemmaKeyOutcome {
        part_a: VerificationOutcome::vacuous(LemmaKeyA, reason),
        part_b: VerificationOutcome::vacuous(LemmaKeyB, reason),
    };
    if !(graph.is_connected() && !opts.is_complete(&graph) && graph.is_regular()) {
        return vacuous("graph is not connected, incomplete and regular");
    }
    if graph.is_empty() {
        return vacuous("graph is empty");
    }
    let all = scenarios(cd);
    if all.is_empty() {
        return vacuous("no commuting noncentral cross-prime pair");
    }
    let instances = all.len() as u64;
    let mut part_a = None;
    let mut part_b = None;
    let mut realized = None;
    for mut s in all {
        if part_b.is_none() && !part_b_holds(&s) {
            part_b = Some(VerificationOutcome::new(
                LemmaKeyB,
                false,
                Witness::Scenario {
                    neighborhood_z0: graph.closed_neighborhood(s.z0).unwrap_or_default(),
                    vertices: graph.vertices().to_vec(),
                    scenario: s.clone(),
                },
                "divisibility of v0, w0 or z0 fails",
            ));
        }
        if part_a.is_some() {
            continue;
        }
        match find_part_a(cd, &graph, &s) {
            Some((v1, w1)) => {
                s.v1 = Some(v1);
                s.w1 = Some(w1);
                realized.get_or_insert(s);
            }
            None => {
                part_a = Some(VerificationOutcome::new(
                    LemmaKeyA,
                    false,
                    Witness::Scenario {
                        neighborhood_z0: graph.closed_neighborhood(s.z0).unwrap_or_default(),
                        vertices: graph.vertices().to_vec(),
                        scenario: s,
                    },
                    "no non-adjacent element-realized v1, w1 around z0",
                ))
            }
        }
    }
    let notes = format!("{instances} scenarios checked");
    LemmaKeyOutcome {
        part_a: part_a.unwrap_or_else(|| {
            let s = realized.expect("at least one scenario");
            VerificationOutcome::new(
                LemmaKeyA,
                true,
                Witness::Scenario {
                    neighborhood_z0: graph.closed_neighborhood(s.z0).unwrap_or_default(),
                    vertices: graph.vertices().to_vec(),
                    scenario: s,
                },
                notes.clone(),
            )
        }),
        part_b: part_b.unwrap_or_else(|| {
            VerificationOutcome::new(LemmaKeyB, true, Witness::Checked { instances }, notes)
        }),
    }
}

/// Connected regular Γ_G(N) plus a commuting noncentral cross-prime pair
/// forces Γ_G(N) to be complete.
pub fn check_theorem_two_primes(cd: &ClassData, opts: &CheckOptions) -> VerificationOutcome {
    const ID: StatementId = StatementId::TheoremTwoPrimes;
    let graph = cd.graph();
    if !(graph.is_connected() && graph.is_regular()) {
        return VerificationOutcome::vacuous(ID, "graph is not connected and regular");
    }
    let Some(scenario) = first_scenario(cd) else {
        return VerificationOutcome::vacuous(ID, "no commuting noncentral cross-prime pair");
    };
    let complete = opts.is_complete(&graph);
    VerificationOutcome::new(
        ID,
        complete,
        Witness::Scenario {
            neighborhood_z0: graph.closed_neighborhood(scenario.z0).unwrap_or_default(),
            vertices: graph.vertices().to_vec(),
            scenario,
        },
        if complete { "" } else { "graph is not complete" },
    )
}

fn main_hypothesis(graph: &CDGraph, opts: &CheckOptions) -> bool {
    graph.is_connected() && !opts.is_complete(graph) && graph.is_regular()
}

/// Connected incomplete regular Γ_G(N) forces N/(N∩Z(G)) to be a p-group and
/// Z(N) ≠ N∩Z(G).
pub fn check_main_theorem(cd: &ClassData, opts: &CheckOptions) -> VerificationOutcome {
    const ID: StatementId = StatementId::MainTheorem;
    let graph = cd.graph();
    if !main_hypothesis(&graph, opts) {
        return VerificationOutcome::vacuous(ID, "graph is not connected, incomplete and regular");
    }
    if graph.len() < 3 {
        return VerificationOutcome::new(
            ID,
            false,
            Witness::Guard {
                vertices: graph.vertices().to_vec(),
            },
            "hypothesis guard: connected and incomplete on fewer than 3 vertices",
        );
    }
    let quotient = cd.central_quotient_order();
    let prime = is_prime_power(quotient);
    let p_group = matches!(prime, Some(PrimePower::Prime(_)));
    let centers_differ = cd.center_of_normal() != cd.normal_cap_center();
    let mut notes = Vec::new();
    if !p_group {
        notes.push("N/(N∩Z(G)) is not a p-group");
    }
    if !centers_differ {
        notes.push("Z(N) = N∩Z(G)");
    }
    VerificationOutcome::new(
        ID,
        p_group && centers_differ,
        Witness::MainTheorem {
            vertices: graph.vertices().to_vec(),
            central_quotient_order: quotient,
            prime,
            center_of_normal_order: cd.center_of_normal().order(),
            normal_cap_center_order: cd.normal_cap_center().order(),
        },
        notes.join("; "),
    )
}

/// Under the main hypothesis with p-group quotient: N = P × A with P generated
/// by the p-elements of N and A, generated by the p′-elements, central in G.
pub fn check_main_theorem_decomposition(cd: &ClassData, opts: &CheckOptions) -> VerificationOutcome {
    const ID: StatementId = StatementId::MainTheoremDecomposition;
    let graph = cd.graph();
    if !main_hypothesis(&graph, opts) || graph.len() < 3 {
        return VerificationOutcome::vacuous(ID, "graph is not connected, incomplete and regular");
    }
    let Some(PrimePower::Prime(p)) = is_prime_power(cd.central_quotient_order()) else {
        return VerificationOutcome::vacuous(ID, "N/(N∩Z(G)) is not a p-group");
    };
    let g = cd.group();
    let n = cd.normal();
    let p_elems = cd.p_elements(p, false);
    let p_prime_elems: Vec<usize> = n
        .members()
        .iter()
        .copied()
        .filter(|&x| cd.element_order(x) as u64 % p != 0)
        .collect();
    let p_part = g.subgroup_generated(&p_elems);
    let a_part = g.subgroup_generated(&p_prime_elems);
    let (failure, element) = decomposition_failure(g, n, &p_part, &a_part, cd.center_of_group());
    VerificationOutcome::new(
        ID,
        failure.is_none(),
        Witness::Decomposition {
            prime: p,
            normal_order: n.order(),
            p_part_order: p_part.order(),
            p_prime_part_order: a_part.order(),
            failure: failure.clone(),
            element,
        },
        failure.unwrap_or_default(),
    )
}

fn decomposition_failure(
    g: &FiniteGroup,
    n: &Subgroup,
    p_part: &Subgroup,
    a_part: &Subgroup,
    zg: &Subgroup,
) -> (Option<String>, Option<usize>) {
    if let Some(&a) = a_part.members().iter().find(|&&a| !zg.contains(a)) {
        return (Some("p'-part is not central in G".into()), Some(a));
    }
    if !p_part.intersection(a_part).is_trivial() {
        return (Some("P ∩ A is nontrivial".into()), None);
    }
    if p_part.order() * a_part.order() != n.order() {
        return (Some("|P|·|A| ≠ |N|".into()), None);
    }
    for &x in n.members() {
        let split = p_part.members().iter().any(|&a| {
            let b = g.mul(g.inv(a), x);
            a_part.contains(b) && g.commute(a, b)
        });
        if !split {
            return (Some("element is not a product of commuting P- and A-parts".into()), Some(x));
        }
    }
    (None, None)
}

/// Γ(N) has exactly two components iff N is quasi-Frobenius with abelian
/// kernel and complement. Both sides are computed independently.
pub fn check_two_component_characterization(n: &FiniteGroup) -> Result<VerificationOutcome> {
    const ID: StatementId = StatementId::TwoComponentCharacterization;
    let cd = ClassData::compute(n, &Subgroup::whole(n.order()))?;
    let component_count = cd.graph().component_count();
    let data = quasi_frobenius_data(n)?;
    let quasi_frobenius = data
        .as_ref()
        .is_some_and(|d| d.kernel_abelian && d.quotient_abelian);
    let two = component_count == 2;
    let notes = match (two, quasi_frobenius) {
        (true, false) => "two components but not quasi-Frobenius with abelian kernel and complement",
        (false, true) => "quasi-Frobenius with abelian kernel and complement but not two components",
        _ => "",
    };
    Ok(VerificationOutcome::new(
        ID,
        two == quasi_frobenius,
        Witness::TwoComponent {
            component_count,
            quasi_frobenius,
            frobenius_kernel_order: data.map(|d| d.kernel.order()),
        },
        notes,
    ))
}

/// Regular disconnected Γ_G(N) should have exactly two complete components.
/// Returns a warning message when it does not.
pub fn regular_disconnected_warning(graph: &CDGraph) -> Option<String> {
    if !graph.is_regular() || graph.is_connected() {
        return None;
    }
    let comps = graph.components();
    let all_complete = comps.iter().all(|c| {
        c.iter()
            .all(|&a| c.iter().all(|&b| a == b || graph.adjacent(a, b).unwrap_or(false)))
    });
    (comps.len() != 2 || !all_complete).then(|| {
        format!(
            "regular disconnected graph on {:?} has {} components (all complete: {all_complete})",
            graph.vertices(),
            comps.len()
        )
    })
}

/// Re-runs the failing assertion recorded in a violated outcome against the
/// same pair. Returns true when the failure reproduces.
pub fn reverify(cd: &ClassData, outcome: &VerificationOutcome, opts: &CheckOptions) -> bool {
    if outcome.status != Status::Violated {
        return false;
    }
    let graph = cd.graph();
    let g = cd.group();
    match &outcome.witness {
        Witness::ElementPower {
            x, exponent, y, size_x, size_y, ..
        } => {
            g.power(*x, *exponent as i64) == *y
                && cd.is_noncentral(*y)
                && cd.class_size(*x) == Some(*size_x)
                && cd.class_size(*y) == Some(*size_y)
                && size_x != size_y
                && graph.is_regular()
                && !graph.are_partners(*size_x, *size_y).unwrap_or(true)
        }
        Witness::Scenario { scenario: s, .. } => {
            let valid = g.commute(s.x0, s.y0)
                && cd.is_noncentral(s.x0)
                && cd.is_noncentral(s.y0)
                && cd.p_elements(s.p1, true).contains(&s.x0)
                && cd.p_elements(s.p2, true).contains(&s.y0)
                && cd.class_size(s.x0) == Some(s.v0)
                && cd.class_size(s.y0) == Some(s.w0)
                && cd.class_size(g.mul(s.x0, s.y0)) == Some(s.z0);
            valid
                && match outcome.statement {
                    StatementId::LemmaKeyB => main_hypothesis(&graph, opts) && !part_b_holds(s),
                    StatementId::LemmaKeyA => {
                        main_hypothesis(&graph, opts) && find_part_a(cd, &graph, s).is_none()
                    }
                    StatementId::TheoremTwoPrimes => {
                        graph.is_connected() && graph.is_regular() && !opts.is_complete(&graph)
                    }
                    _ => false,
                }
        }
        Witness::Guard { vertices } => {
            main_hypothesis(&graph, opts) && graph.vertices() == vertices.as_slice() && vertices.len() < 3
        }
        Witness::MainTheorem { .. } => {
            main_hypothesis(&graph, opts)
                && (!matches!(
                    is_prime_power(cd.central_quotient_order()),
                    Some(PrimePower::Prime(_))
                ) || cd.center_of_normal() == cd.normal_cap_center())
        }
        Witness::Decomposition { .. } => {
            check_main_theorem_decomposition(cd, opts).status == Status::Violated
        }
        Witness::TwoComponent { .. } => {
            let n = g.subgroup_as_group(cd.normal());
            check_two_component_characterization(&n).is_ok_and(|o| o.status == Status::Violated)
        }
        Witness::Vacuous { .. } | Witness::Checked { .. } => false,
    }
}
