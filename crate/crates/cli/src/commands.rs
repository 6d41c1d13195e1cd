use crate::args::{Cli, Cmd, LatticeOp, OracleKind, PGroupAction, RandomKind};
use adjnorm::adjoint::{adjoint_algebra, star_involution, AlgebraPair, StarAlgebra};
use adjnorm::algdecomp::Wedderburn;
use adjnorm::bimap::{fixture, Bimap};
use adjnorm::field::Gf;
use adjnorm::group::{generators_of, Caps};
use adjnorm::oracle::{
    brute_autotopisms, brute_isometries, brute_normalizer, brute_pseudo_isometries, brute_subspace_stabilizer,
    ElementTable,
};
use adjnorm::pgroup::{baer_bimap, pseudo_isometry_group, quadstab_solve, PGroupData, StabilizerProblem};
use adjnorm::random::{random_bimap, random_matrix_space, random_subring};
use adjnorm::registry::Registry;
use adjnorm::strategy::{group_strategies, GroupStrategy, GroupSummary};
use adjnorm::tensor::{exterior_over, tensor_over};
use adjnorm::verify::{suites, VerifyConfig};
use adjnorm::{Error, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::io::Read;

pub struct Output {
    pub value: Value,
    pub code: u8,
}

impl Output {
    fn ok(value: Value) -> Output {
        Output { value, code: 0 }
    }

    /// Exit 2 when the order could not be certified under the caps.
    fn group(value: Value, complete: bool) -> Output {
        Output { value, code: if complete { 0 } else { 2 } }
    }
}

fn read_json(cli: &Cli) -> Result<Value> {
    let path = cli.common.input.as_ref().ok_or_else(|| Error::Input("missing --in".into()))?;
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map_err(|e| Error::Input(e.to_string()))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    }
    serde_json::from_str(&text).map_err(|e| Error::Input(format!("JSON: {e}")))
}

fn read_bimap(cli: &Cli) -> Result<Bimap> {
    match &cli.common.fixture {
        Some(name) => fixture(name),
        None => Bimap::from_json(&read_json(cli)?),
    }
}

/// An algebra pair, or the adjoint ring of a bimap.
fn read_algebra(cli: &Cli) -> Result<AlgebraPair> {
    if cli.common.fixture.is_some() {
        return Ok(adjoint_algebra(&read_bimap(cli)?));
    }
    let v = read_json(cli)?;
    if v.get("pairs").is_some() {
        AlgebraPair::from_json(&v)
    } else {
        Ok(adjoint_algebra(&Bimap::from_json(&v)?))
    }
}

fn star_algebra(bm: &Bimap) -> Result<StarAlgebra> {
    StarAlgebra::from_pair(&star_involution(bm)?)
}

fn pick<'a>(reg: &'a Registry<dyn GroupStrategy>, name: &str) -> Result<&'a dyn GroupStrategy> {
    reg.get(name).ok_or_else(|| Error::Input(format!("unknown strategy {name} (have {:?})", reg.names())))
}

fn group_output(g: GroupSummary, strategy: &str) -> Output {
    let complete = g.order.is_some();
    let mut v = g.to_json();
    v["strategy"] = json!(strategy);
    Output::group(v, complete)
}

fn table_output(t: ElementTable, caps: Caps) -> Result<Output> {
    let one = adjnorm::algebra::BlockDiag::identity(t.elements()[0].field(), &t.dims);
    let gens = generators_of(&one, t.elements(), caps.closure)?;
    Ok(Output::ok(json!({
        "dims": t.dims,
        "order": t.order().to_string(),
        "generators": gens.iter().map(|g| g.0.iter().map(|m| m.to_json()).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })))
}

pub fn dispatch(cli: &Cli) -> Result<Output> {
    let caps = cli.common.caps;
    let mut rng = ChaCha8Rng::seed_from_u64(cli.common.seed);
    let strategies = group_strategies();
    match &cli.cmd {
        Cmd::Adjoint => {
            let bm = read_bimap(cli)?;
            let (alg, star) = match star_involution(&bm) {
                Ok(p) => (p, true),
                Err(Error::NotSymmetricOrAlternating) | Err(Error::NotSquare) => (adjoint_algebra(&bm), false),
                Err(e) => return Err(e),
            };
            Ok(Output::ok(json!({"dim": alg.dim(), "has_star": star, "algebra": alg.to_json()})))
        }
        Cmd::Tensor => {
            let t = tensor_over(&read_algebra(cli)?);
            Ok(Output::ok(t.to_json()))
        }
        Cmd::Exterior { symmetric } => {
            let bm = exterior_over(&read_algebra(cli)?, !symmetric)?;
            Ok(Output::ok(bm.to_json()))
        }
        Cmd::Lattice { op } => {
            let v = read_json(cli)?;
            let l = Bimap::from_json(&v["left"])?;
            let r = Bimap::from_json(&v["right"])?;
            let out = match op {
                LatticeOp::Meet => l.meet(&r)?,
                LatticeOp::Join => l.join(&r)?,
            };
            Ok(Output::ok(json!({"bimap": out.to_json(), "kernel_dim": out.kernel().dim()})))
        }
        Cmd::Normalizer => {
            let pair = read_algebra(cli)?;
            let alg = pair.to_algebra();
            let g = pick(&strategies, &cli.common.strategy)?.normalizer(&alg, &mut rng.clone(), caps)?;
            let mut out = group_output(g, &cli.common.strategy);
            if cli.common.strategy == "structural" {
                out.value["decomposition"] = Wedderburn::decompose(&alg, None, &mut rng)?.to_json();
            }
            Ok(out)
        }
        Cmd::StarNormalizer => {
            let sa = star_algebra(&read_bimap(cli)?)?;
            let g = pick(&strategies, &cli.common.strategy)?.star_normalizer(&sa, &mut rng, caps)?;
            Ok(group_output(g, &cli.common.strategy))
        }
        Cmd::Pseudo => {
            let bm = read_bimap(cli)?;
            let g = pick(&strategies, &cli.common.strategy)?.pseudo_isometries(&bm, &mut rng, caps)?;
            Ok(group_output(g, &cli.common.strategy))
        }
        Cmd::Pgroup { action, surjective } => {
            let data = PGroupData::from_json(&read_json(cli)?)?;
            let bm = baer_bimap(&data)?;
            match action {
                PGroupAction::Bimap => Ok(Output::ok(json!({"bimap": bm.to_json()}))),
                PGroupAction::Pseudo => {
                    let (order, extra) = if cli.common.strategy == "brute" {
                        (Some(num_order(brute_pseudo_isometries(&bm, caps.filter)?.order())), json!({}))
                    } else {
                        let res = pseudo_isometry_group(&bm, &mut rng, caps)?;
                        let extra = json!({
                            "orbit": res.orbit,
                            "star_order": res.star_order.as_ref().map(|o| o.to_string()),
                            "generators": res.group.gens.iter().map(|g| g.0[0].to_json()).collect::<Vec<_>>(),
                        });
                        (res.group.order.clone(), extra)
                    };
                    let hom = data.hom_count();
                    let mut v = json!({
                        "bimap": bm.to_json(),
                        "order": order.as_ref().map(|o| o.to_string()),
                        "hom_count": hom.to_string(),
                    });
                    if let Value::Object(m) = extra {
                        for (k, x) in m {
                            v[k] = x;
                        }
                    }
                    if *surjective {
                        v["aut_order"] = json!(order.as_ref().map(|o| (o * &hom).to_string()));
                    }
                    Ok(Output::group(v, order.is_some()))
                }
            }
        }
        Cmd::Quadstab => {
            let p = StabilizerProblem::from_json(&read_json(cli)?)?;
            if cli.common.strategy == "brute" {
                let t = if p.hermitian.is_some() {
                    brute_pseudo_isometries(&p.bimap()?, caps.filter)?
                } else {
                    brute_subspace_stabilizer(&p.field, p.a, p.b, &p.w, caps.filter)?
                };
                return table_output(t, caps);
            }
            let res = quadstab_solve(&p, &mut rng, caps)?;
            Ok(Output::ok(json!({
                "order": res.order.to_string(),
                "generators": res.gens.iter().map(|(x, y)| json!({"x": x.to_json(), "y": y.to_json()})).collect::<Vec<_>>(),
            })))
        }
        Cmd::Oracle { kind } => {
            let t = match kind {
                OracleKind::Autotopisms => brute_autotopisms(&read_bimap(cli)?, caps.filter)?,
                OracleKind::Isometries => brute_isometries(&read_bimap(cli)?, caps.filter)?,
                OracleKind::Pseudo => brute_pseudo_isometries(&read_bimap(cli)?, caps.filter)?,
                OracleKind::Normalizer => brute_normalizer(&read_algebra(cli)?.to_algebra(), None, caps.filter)?,
                OracleKind::StarNormalizer => {
                    let sa = star_algebra(&read_bimap(cli)?)?;
                    brute_normalizer(&sa.alg, Some(&sa), caps.filter)?
                }
            };
            table_output(t, caps)
        }
        Cmd::Verify { suite, trials } => {
            let reg = suites();
            let chosen: Vec<_> = if suite == "all" {
                reg.iter().collect()
            } else {
                vec![reg.get(suite).ok_or_else(|| Error::Input(format!("unknown suite {suite} (have {:?})", reg.names())))?]
            };
            let cfg = VerifyConfig { seed: cli.common.seed, trials: *trials, caps };
            let (mut passed, mut failed) = (0usize, 0usize);
            let mut reports = Vec::new();
            for s in chosen {
                let tallies = s.run(&cfg);
                for t in &tallies {
                    failed += t.failures.len();
                    passed += t.checked - t.failures.len();
                }
                reports.push(json!({"suite": s.name(), "checks": tallies.iter().map(|t| t.to_json()).collect::<Vec<_>>()}));
            }
            Ok(Output { value: json!({"passed": passed, "failed": failed, "suites": reports}), code: if failed == 0 { 0 } else { 3 } })
        }
        Cmd::Random { kind, q, a, b, w, gens, count } => {
            let f = Gf::of_order(*q)?;
            let items: Vec<Value> = (0..*count)
                .map(|_| match kind {
                    RandomKind::Bimap => random_bimap(&f, *a, *b, *w, &mut rng).to_json(),
                    RandomKind::Algebra => random_subring(&f, *a, *b, *gens, &mut rng).to_json(),
                    RandomKind::Subspace => {
                        let ws = random_matrix_space(&f, *a, *b, (*w).max(1), &mut rng);
                        Bimap::from_slices(&f, *a, *b, ws).expect("shapes agree").to_json()
                    }
                })
                .collect();
            Ok(Output::ok(if *count == 1 { json!({"instance": items[0]}) } else { json!({"instances": items}) }))
        }
    }
}

fn num_order(n: usize) -> num_bigint::BigUint {
    num_bigint::BigUint::from(n)
}
