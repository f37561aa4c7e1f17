use clap::ValueEnum;
use orthocevia::constructions::{
    cevian_feet, contact_triangle, extouch_triangle, isogonal_conjugate, medial_triangle, orthic_triangle,
    pedal_triangle, triangle_center, CenterKind, CevianFeet,
};
use orthocevia::relations::{
    homology, is_bilogical, is_orthohomological, orthohomological_pedal_check, orthology, six_point_spread, terquem,
};
use serde_json::{json, Map, Value};

use crate::scene::{CliError, CliResult, Scene};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Relation {
    Homology,
    Orthology,
    Bilogical,
    Orthohomological,
    Sixpoint,
    Terquem,
    Theorem7,
}

/// Second triangle for the pairwise relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum With {
    Contact,
    Extouch,
    Medial,
    Orthic,
    /// Pedal triangle of P1.
    Pedal,
    /// Cevian feet of P1.
    Cevian,
    /// The named points A1, B1, C1.
    Points,
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("plain data serializes")
}

pub fn centers(scene: &Scene) -> Value {
    let t = &scene.triangle;
    let mut points = Map::new();
    for kind in CenterKind::ALL {
        points.insert(kind.name().to_owned(), to_value(&triangle_center(t, kind)));
    }
    json!({
        "triangle": to_value(&t.vertices()),
        "sides": {"a": t.a(), "b": t.b(), "c": t.c()},
        "s": t.s(),
        "points": points,
    })
}

fn second_triangle(scene: &Scene, with: Option<With>) -> CliResult<CevianFeet<f64>> {
    let t = &scene.triangle;
    let with = with.ok_or_else(|| CliError::Usage("this relation needs --with <triangle>".into()))?;
    Ok(match with {
        With::Contact => contact_triangle(t),
        With::Extouch => extouch_triangle(t),
        With::Medial => medial_triangle(t),
        With::Orthic => orthic_triangle(t, &scene.tol)?,
        With::Pedal => pedal_triangle(t, &scene.require("P1")?, &scene.tol)?,
        With::Cevian => cevian_feet(t, &scene.require("P1")?)?,
        With::Points => CevianFeet::new(scene.require("A1")?, scene.require("B1")?, scene.require("C1")?),
    })
}

/// Runs the relation and returns `(holds, document)`.
pub fn check(scene: &Scene, relation: Relation, with: Option<With>) -> CliResult<(bool, Value)> {
    let t = &scene.triangle;
    let tol = &scene.tol;
    let (holds, result) = match relation {
        Relation::Homology => {
            let other = second_triangle(scene, with)?;
            let h = homology(t, &other, tol)?;
            (h.concurrent, json!({"second_triangle": to_value(&other.as_array()), "homology": to_value(&h)}))
        }
        Relation::Orthology | Relation::Bilogical | Relation::Orthohomological => {
            let other = second_triangle(scene, with)?;
            let (fwd, bwd) = orthology(t, &other, tol)?;
            let mut doc = json!({
                "second_triangle": to_value(&other.as_array()),
                "forward": to_value(&fwd),
                "backward": to_value(&bwd),
            });
            let holds = match relation {
                Relation::Orthology => fwd.concurrent && bwd.concurrent,
                Relation::Bilogical => is_bilogical(t, &other, tol)?,
                _ => {
                    doc["homology"] = to_value(&homology(t, &other, tol)?);
                    is_orthohomological(t, &other, tol)?
                }
            };
            (holds, doc)
        }
        Relation::Sixpoint => {
            let p1 = scene.require("P1")?;
            let p2 = match scene.point("P2") {
                Some(p) => p,
                None => isogonal_conjugate(t, &p1, tol)?,
            };
            let r = six_point_spread(t, &p1, &p2, tol)?;
            let holds = r.max_deviation <= tol.rel_eps;
            let mut doc = to_value(&r);
            doc["p1"] = to_value(&p1);
            doc["p2"] = to_value(&p2);
            doc["radius"] = json!(r.mean_radius());
            (holds, doc)
        }
        Relation::Terquem => {
            let feet = match with {
                None => cevian_feet(t, &scene.require("P1")?)?,
                Some(_) => second_triangle(scene, with)?,
            };
            let r = terquem(t, &feet, tol)?;
            let mut doc = to_value(&r);
            doc["feet"] = to_value(&feet.as_array());
            (r.second_homology.concurrent, doc)
        }
        Relation::Theorem7 => {
            let r = orthohomological_pedal_check(t, &scene.require("P1")?, tol)?;
            let holds = r.consistent() && (!r.homological_1 || r.six_feet_concyclic);
            (holds, to_value(&r))
        }
    };
    let name = relation.to_possible_value().expect("no skipped variants").get_name().to_owned();
    Ok((
        holds,
        json!({
            "relation": name,
            "holds": holds,
            "triangle": to_value(&t.vertices()),
            "tolerance": to_value(tol),
            "result": result,
        }),
    ))
}
