use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use exceptia::clifford::{
    classify, clif_mul, spinor_taxonomy, super_ym_dims, CliffordSignature, SpinorKind,
};
use exceptia::exactnum::parse_rational;
use exceptia::hypercomplex::{
    cd_conj, cd_inv, cd_mul, cd_norm, fano_mul, fano_octonion_mul, ijk_permute, xproduct,
    HyperNumber, PermutationIJK,
};
use exceptia::identities::{
    bbp_pi_hex, cannonball_search, linking_number, spin_area, PolyLoop, SpinList,
};
use exceptia::lattices::{
    dual_lattice, format_lattice, ii_member, is_even, is_fundamental_root, is_integral,
    is_unimodular, leech_from_icosians_with, leech_from_ii26, lll_reduce, minimum, minkowski_dot,
    named, parse_lattice, short_vector_list, short_vectors, theta_series, weyl_vector, IcosianForm,
    Lattice, LorentzianVector,
};
use exceptia::modular::{eta24, j_from_lattice, LaurentSeries};
use num_bigint::BigInt;
use num_rational::BigRational;

use crate::args::{
    CliffordCmd, Command, HyperCmd, IdCmd, LatticeCmd, LatticeSource, LeechConstruction, ModularCmd,
};
use crate::parse::{hyper_operands, parse_clifford, parse_loops, parse_vector};
use crate::schema::{self, big_strings, strings, Exact};
use crate::{CliError, Report};

type Q = HyperNumber<BigRational>;

pub fn dispatch(cmd: &Command) -> Result<Report, CliError> {
    match cmd {
        Command::Hyper(c) => hyper(c),
        Command::Clifford(c) => clifford(c),
        Command::Lattice(c) => lattice(c),
        Command::Modular(c) => modular(c),
        Command::Id(c) => ident(c),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn hyper_report(x: &Q) -> Report {
    let data = schema::Hyper {
        level: x.level(),
        coords: strings(x.coords()),
        text: x.to_string(),
    };
    Report::new(data.text.clone(), &data)
}

fn one_operand(x: &str, level: Option<u32>) -> Result<Q, CliError> {
    Ok(hyper_operands(&[x.to_string()], level)?.remove(0))
}

fn hyper(cmd: &HyperCmd) -> Result<Report, CliError> {
    match cmd {
        HyperCmd::Mul { x, y, level, fano } => {
            let level = if *fano {
                Some(level.unwrap_or(3))
            } else {
                *level
            };
            let ops = hyper_operands(&[x.clone(), y.clone()], level)?;
            let p = if *fano {
                fano_octonion_mul(&ops[0], &ops[1])?
            } else {
                cd_mul(&ops[0], &ops[1])?
            };
            Ok(hyper_report(&p))
        }
        HyperCmd::Conj { x, level } => Ok(hyper_report(&cd_conj(&one_operand(x, *level)?))),
        HyperCmd::Inv { x, level } => Ok(hyper_report(&cd_inv(&one_operand(x, *level)?)?)),
        HyperCmd::Norm { x, level } => {
            let n = cd_norm(&one_operand(x, *level)?);
            Ok(Report::new(
                n.to_string(),
                &schema::Scalar {
                    value: n.to_string(),
                },
            ))
        }
        HyperCmd::Fano { i, j } => {
            let (index, sign) = fano_mul(*i, *j)?;
            let unit = if index == 0 {
                "1".to_string()
            } else {
                format!("e{index}")
            };
            let text = format!("e{i} e{j} = {}{unit}", if sign < 0 { "-" } else { "" });
            Ok(Report::new(
                text.clone(),
                &schema::FanoProduct {
                    i: *i,
                    j: *j,
                    index,
                    sign,
                    text,
                },
            ))
        }
        HyperCmd::Xprod { a, b, c } => {
            let ops = hyper_operands(&[a.clone(), b.clone(), c.clone()], Some(3))?;
            Ok(hyper_report(&xproduct(&ops[0], &ops[1], &ops[2])?))
        }
        HyperCmd::Permute { perm, q } => {
            let p = PermutationIJK::parse(perm)?;
            Ok(hyper_report(&ijk_permute(&p, &one_operand(q, Some(2))?)?))
        }
    }
}

fn clifford(cmd: &CliffordCmd) -> Result<Report, CliError> {
    match cmd {
        CliffordCmd::Mul { x, y, sig } => {
            let s = CliffordSignature::new(sig.p, sig.q)?;
            let r = clif_mul(&parse_clifford(x, s)?, &parse_clifford(y, s)?)?;
            let terms = r
                .terms()
                .iter()
                .map(|(&m, c)| {
                    let blade: String = (0..32)
                        .filter(|b| m >> b & 1 == 1)
                        .map(|b| format!("e{}", b + 1))
                        .collect();
                    (
                        if blade.is_empty() {
                            "1".to_string()
                        } else {
                            blade
                        },
                        c.to_string(),
                    )
                })
                .collect();
            let data = schema::Clifford {
                p: sig.p,
                q: sig.q,
                terms,
                text: r.to_string(),
            };
            Ok(Report::new(data.text.clone(), &data))
        }
        CliffordCmd::Classify { p, q } => {
            let c = classify(CliffordSignature::for_classification(*p, *q)?);
            let data = schema::Classification {
                p: *p,
                q: *q,
                ring: c.ring.symbol().to_string(),
                size: c.size,
                summands: c.summands,
                text: c.to_string(),
            };
            Ok(Report::new(format!("C_{{{p},{q}}} = {c}"), &data))
        }
        CliffordCmd::Spinors { n, to } => {
            let hi = to.unwrap_or(*n);
            if hi < *n {
                return Err(CliError::Usage(format!("--to {hi} is below {n}")));
            }
            let mut rows = Vec::new();
            let mut text = String::from("n\tDirac\tMajorana\tWeyl\tMajorana-Weyl\n");
            for d in *n..=hi {
                let s = spinor_taxonomy(d)?;
                text.push_str(&format!("{s}\n"));
                rows.push(schema::Spinors {
                    n: s.n,
                    dirac_complex_dim: s.dirac_complex_dim,
                    majorana: s.majorana,
                    weyl: s.weyl,
                    majorana_weyl: s.majorana_weyl,
                    minimal_real_components: s.minimal_real_components,
                    dirac_space: s.space(SpinorKind::Dirac).unwrap_or_default(),
                    majorana_space: s.space(SpinorKind::Majorana),
                    weyl_space: s.space(SpinorKind::Weyl),
                    majorana_weyl_space: s.space(SpinorKind::MajoranaWeyl),
                });
            }
            Ok(Report::new(text, &rows))
        }
        CliffordCmd::Superym { lo, hi } => {
            let dims: Vec<usize> = super_ym_dims(*lo, *hi)?.into_iter().collect();
            let text = dims
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ");
            Ok(Report::new(
                text,
                &schema::SuperYm {
                    lo: *lo,
                    hi: *hi,
                    dims,
                },
            ))
        }
    }
}

fn load(src: &LatticeSource) -> Result<Lattice, CliError> {
    match (&src.name, &src.lattice, &src.input) {
        (Some(n), None, None) | (None, Some(n), None) => Ok(named(n)?),
        (None, None, Some(path)) => Ok(parse_lattice(&read(path)?)?),
        _ => Err(CliError::Usage(
            "give a lattice NAME, --lattice NAME or --input FILE".into(),
        )),
    }
}

fn lattice_report(l: &Lattice) -> Report {
    let rows = |m: &[Vec<BigRational>]| m.iter().map(|r| strings(r)).collect();
    let data = schema::LatticeData {
        rank: l.rank(),
        ambient: l.ambient_dim(),
        metric: l.metric().name().to_string(),
        scale: l.scale().to_string(),
        basis: rows(l.basis()),
        gram: rows(l.gram()),
    };
    Report::new(format_lattice(l), &data)
}

fn counts_text(counts: &BTreeMap<u64, u64>) -> String {
    if counts.is_empty() {
        return "no vectors\n".into();
    }
    counts
        .iter()
        .map(|(n, c)| format!("norm {n}: {c}\n"))
        .collect()
}

fn lattice(cmd: &LatticeCmd) -> Result<Report, CliError> {
    match cmd {
        LatticeCmd::Build { src } => Ok(lattice_report(&load(src)?)),
        LatticeCmd::Dual { src } => Ok(lattice_report(&dual_lattice(&load(src)?)?)),
        LatticeCmd::Lll { src, delta } => {
            let d = parse_rational(delta)?;
            Ok(lattice_report(&lll_reduce(&load(src)?, &d)?))
        }
        LatticeCmd::Info { src } => {
            let l = load(src)?;
            let (min_norm, kissing) = if l.is_definite() {
                let (m, k) = minimum(&l)?;
                (Some(Exact::from(&m)), Some(k))
            } else {
                (None, None)
            };
            let data = schema::LatticeInfo {
                rank: l.rank(),
                det: Exact::from(&l.det()),
                integral: is_integral(&l),
                even: is_even(&l),
                unimodular: is_unimodular(&l),
                min_norm,
                kissing,
            };
            let show = |e: &Option<Exact>| match e {
                Some(Exact::Int(n)) => n.to_string(),
                Some(Exact::Text(s)) => s.clone(),
                None => "-".into(),
            };
            let text = format!(
                "rank: {}\ndet: {}\nintegral: {}\neven: {}\nunimodular: {}\nmin_norm: {}\nkissing: {}",
                data.rank,
                l.det(),
                data.integral,
                data.even,
                data.unimodular,
                show(&data.min_norm),
                data.kissing.map_or("-".into(), |k| k.to_string())
            );
            Ok(Report::new(text, &data))
        }
        LatticeCmd::Theta { src, order } => {
            let t = theta_series(&load(src)?, *order)?;
            let text = t
                .counts
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ");
            Ok(Report::new(
                text,
                &schema::Theta {
                    order: *order,
                    counts: big_strings(&t.counts),
                },
            ))
        }
        LatticeCmd::Shortvec {
            src,
            max_norm,
            limit,
        } => {
            let l = load(src)?;
            let counts = short_vectors(&l, *max_norm)?;
            let vectors: Vec<schema::ShortVector> = if *limit == 0 {
                Vec::new()
            } else {
                short_vector_list(&l, *max_norm)?
                    .into_iter()
                    .take(*limit)
                    .map(|(norm, coeffs)| {
                        let big: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
                        schema::ShortVector {
                            norm,
                            coords: strings(&l.vector(&big)),
                            coeffs,
                        }
                    })
                    .collect()
            };
            let mut text = counts_text(&counts);
            for v in &vectors {
                text.push_str(&format!("{}\t({})\n", v.norm, v.coords.join(", ")));
            }
            Ok(Report::new(
                text,
                &schema::ShortVectors {
                    max_norm: *max_norm,
                    counts,
                    vectors,
                },
            ))
        }
        LatticeCmd::Leech {
            construction,
            max_norm,
        } => {
            let (name, l) = match construction {
                LeechConstruction::Ii => ("ii", leech_from_ii26()?),
                LeechConstruction::Icosian => (
                    "icosian",
                    leech_from_icosians_with(IcosianForm::Coordinate)?,
                ),
                LeechConstruction::IcosianGolden => (
                    "icosian-golden",
                    leech_from_icosians_with(IcosianForm::Golden)?,
                ),
            };
            let counts = short_vectors(&l, *max_norm)?;
            let data = schema::Leech {
                construction: name.into(),
                rank: l.rank(),
                det: Exact::from(&l.det()),
                even: is_even(&l),
                unimodular: is_unimodular(&l),
                counts,
            };
            let text = format!(
                "construction: {name}\nrank: {}\ndet: {}\neven: {}\nunimodular: {}\n{}",
                data.rank,
                l.det(),
                data.even,
                data.unimodular,
                counts_text(&data.counts)
            );
            Ok(Report::new(text, &data))
        }
        LatticeCmd::Weyl { dim } => {
            let w = weyl_vector(*dim)?;
            let norm = minkowski_dot(&w, &w)?;
            let data = schema::Weyl {
                dim: *dim,
                vector: strings(&w.coords()),
                norm: Exact::from(&norm),
                member: ii_member(&w.coords())?,
                lightlike: num_traits::Zero::is_zero(&norm),
            };
            let text = format!(
                "{w}\nnorm: {norm}\nmember: {}\nlightlike: {}",
                data.member, data.lightlike
            );
            Ok(Report::new(text, &data))
        }
        LatticeCmd::Root { dim, vector } => {
            let r = LorentzianVector::from_rationals(&parse_vector(vector)?)?;
            let fundamental = is_fundamental_root(&r, *dim)?;
            let w = weyl_vector(*dim)?;
            let (norm, pairing) = (minkowski_dot(&r, &r)?, minkowski_dot(&r, &w)?);
            let data = schema::Root {
                dim: *dim,
                vector: strings(&r.coords()),
                norm: Exact::from(&norm),
                weyl_pairing: Exact::from(&pairing),
                fundamental,
            };
            let text =
                format!("{r}\nnorm: {norm}\nweyl pairing: {pairing}\nfundamental: {fundamental}");
            Ok(Report::new(text, &data))
        }
    }
}

fn series_report(s: &LaurentSeries) -> Report {
    let data = schema::Series {
        low: s.low(),
        order: s.order(),
        coeffs: big_strings(s.coeffs()),
        text: s.to_string(),
    };
    Report::new(data.text.clone(), &data)
}

fn modular(cmd: &ModularCmd) -> Result<Report, CliError> {
    match cmd {
        ModularCmd::Eta24 { order } => Ok(series_report(&eta24(*order)?)),
        ModularCmd::J { src, order } => Ok(series_report(&j_from_lattice(&load(src)?, *order)?)),
    }
}

fn ident(cmd: &IdCmd) -> Result<Report, CliError> {
    match cmd {
        IdCmd::Pihex { start, count } => {
            let digits = bbp_pi_hex(*start, *count)?;
            Ok(Report::new(
                digits.clone(),
                &schema::PiHex {
                    start: *start,
                    count: *count,
                    digits,
                },
            ))
        }
        IdCmd::Cannonball { limit } => {
            if *limit == 0 {
                return Err(CliError::Usage("--limit must be at least 1".into()));
            }
            let solutions: Vec<u64> = cannonball_search(*limit).into_iter().collect();
            let text = solutions
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ");
            Ok(Report::new(
                text,
                &schema::Cannonball {
                    limit: *limit,
                    solutions,
                },
            ))
        }
        IdCmd::Area { spins } => {
            let a = spin_area(&SpinList::parse(spins)?);
            let spins = a
                .exact
                .iter()
                .map(|(&t, &m)| (BigRational::new(t.into(), 2.into()).to_string(), m))
                .collect();
            let data = schema::Area {
                spins,
                exact: a.to_string(),
                approx: a.approx,
            };
            Ok(Report::new(
                format!("{} ≈ {:.12}", data.exact, data.approx),
                &data,
            ))
        }
        IdCmd::Link { file, input } => {
            let path = file
                .as_ref()
                .or(input.as_ref())
                .ok_or_else(|| CliError::Usage("give a loop FILE".into()))?;
            let (g, h) = parse_loops(&read(path)?)?;
            let l = linking_number(&PolyLoop::new(g)?, &PolyLoop::new(h)?)?;
            Ok(Report::new(
                l.to_string(),
                &schema::Link { linking_number: l },
            ))
        }
    }
}
