//! Validated configurations and the work behind each subcommand.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;
use std::sync::Arc;

use clap::ValueEnum;

use specht_core::boltje_maisch::{build_bm_complex, chain_iso_check, induced_schur_image, BmError, Pool};
use specht_core::combinatorics::{compositions, partitions, Composition};
use specht_core::qschur::{schur_dimension, SchurAlgebra};
use specht_core::resolutions::{bar_complex, homology, splitting_check, validate, ChainComplex};
use specht_core::ring::{Ring, RingKind, RingSpec};
use specht_core::with_ring;

use crate::cache;
use crate::report::{
    CacheReport, CheckReport, CheckResult, ConfigEcho, DimEntry, EnumerateReport, HomologyReport, Outcome, Report,
    REPORT_VERSION,
};
use crate::{CliError, Options};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Target {
    D2,
    Exactness,
    Splitting,
    Triangularity,
    ChainIso,
    Dims,
    All,
}

impl Target {
    const EACH: [Target; 6] =
        [Target::D2, Target::Exactness, Target::Splitting, Target::Triangularity, Target::ChainIso, Target::Dims];

    fn name(self) -> &'static str {
        match self {
            Target::D2 => "d2",
            Target::Exactness => "exactness",
            Target::Splitting => "splitting",
            Target::Triangularity => "triangularity",
            Target::ChainIso => "chain-iso",
            Target::Dims => "dims",
            Target::All => "all",
        }
    }

    /// Targets that look at the complex of a partition λ.
    fn needs_complex(self) -> bool {
        matches!(self, Target::D2 | Target::Exactness | Target::ChainIso | Target::Dims)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Enumerate,
    Build,
    Check,
    Warm,
}

#[derive(Clone, Debug)]
pub struct Job {
    kind: Kind,
    n: usize,
    r: usize,
    lambda: Option<Composition>,
    spec: RingSpec,
    pool: Pool,
    targets: BTreeSet<Target>,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

impl Job {
    fn parse(o: &Options, kind: Kind, targets: BTreeSet<Target>) -> Result<Job, CliError> {
        if o.n == 0 || o.r == 0 {
            return Err(usage("--n and --r must be positive"));
        }
        let spec = RingSpec::parse(&o.ring, &o.q).map_err(|e| usage(e.to_string()))?;
        let pool: Pool = o.pool.parse().map_err(|e: BmError| usage(e.to_string()))?;
        let lambda = match &o.lambda {
            None => None,
            Some(s) => {
                let lam = Composition::parse(s).map_err(|e| usage(e.to_string()))?;
                if lam.len() != o.n || lam.total() != o.r {
                    return Err(usage(format!("--lambda {s} is not a composition of {} into {} parts", o.r, o.n)));
                }
                Some(lam)
            }
        };
        Ok(Job { kind, n: o.n, r: o.r, lambda, spec, pool, targets })
    }

    pub fn enumerate(o: &Options) -> Result<Job, CliError> {
        Self::parse(o, Kind::Enumerate, BTreeSet::new())
    }

    pub fn build(o: &Options) -> Result<Job, CliError> {
        let job = Self::parse(o, Kind::Build, BTreeSet::new())?;
        job.require_partition()?;
        Ok(job)
    }

    pub fn warm(o: &Options) -> Result<Job, CliError> {
        if o.cache.is_none() {
            return Err(usage("cache warm needs --cache <dir>"));
        }
        Self::parse(o, Kind::Warm, BTreeSet::new())
    }

    pub fn check(o: &Options, targets: &[Target]) -> Result<Job, CliError> {
        let mut set: BTreeSet<Target> = targets.iter().copied().collect();
        if set.remove(&Target::All) {
            set.extend(Target::EACH);
        }
        let job = Self::parse(o, Kind::Check, set)?;
        if job.targets.iter().any(|t| t.needs_complex()) {
            job.require_partition()?;
        }
        if job.targets.contains(&Target::Splitting) {
            let lam = job.lambda.as_ref().ok_or_else(|| usage("splitting needs --lambda"))?;
            if !job.pool.weights(job.n, job.r).contains(lam) {
                return Err(usage(format!("{lam} is not in the {} pool", job.pool)));
            }
        }
        if job.targets.contains(&Target::ChainIso) && job.n < job.r {
            return Err(usage(format!("chain-iso needs n ≥ r (n = {}, r = {})", job.n, job.r)));
        }
        Ok(job)
    }

    fn require_partition(&self) -> Result<&Composition, CliError> {
        let lam = self.lambda.as_ref().ok_or_else(|| usage("--lambda is required"))?;
        if !lam.is_partition() {
            return Err(usage(format!("{lam} is not a partition")));
        }
        Ok(lam)
    }

    fn echo(&self) -> ConfigEcho {
        ConfigEcho {
            command: match self.kind {
                Kind::Enumerate => "enumerate",
                Kind::Build => "build",
                Kind::Check => "check",
                Kind::Warm => "cache warm",
            }
            .to_string(),
            n: self.n,
            r: self.r,
            lambda: self.lambda.as_ref().map(|l| l.parts().to_vec()),
            ring: match self.spec.kind {
                RingKind::Rationals => "q".to_string(),
                RingKind::Integers => "zz".to_string(),
                RingKind::PrimeField(p) => format!("fp:{p}"),
            },
            q: self.spec.q.to_string(),
            pool: self.pool.to_string(),
            checks: self.targets.iter().map(|t| t.name().to_string()).collect(),
        }
    }

    pub fn run(&self, cache_dir: Option<&Path>) -> Result<Outcome, CliError> {
        if self.kind == Kind::Enumerate {
            return Ok(self.enumerate_report());
        }
        with_ring!(self.spec.build(), ring => self.run_with(ring, cache_dir))
    }

    fn enumerate_report(&self) -> Outcome {
        let names = |v: Vec<Composition>| v.iter().map(ToString::to_string).collect();
        Outcome {
            report: Report::Enumerate(EnumerateReport {
                version: REPORT_VERSION,
                config: self.echo(),
                compositions: names(compositions(self.n, self.r)),
                partitions: names(partitions(self.n, self.r)),
                schur_dimension: schur_dimension(self.n, self.r),
                elapsed_ms: None,
            }),
        }
    }

    fn run_with<R: Ring>(&self, ring: R, cache_dir: Option<&Path>) -> Result<Outcome, CliError> {
        let alg = Arc::new(SchurAlgebra::new(ring, self.n, self.r));
        if let Some(dir) = cache_dir {
            let loaded = cache::load(dir, &alg);
            if loaded > 0 {
                eprintln!("specht: loaded {loaded} structure constants");
            }
        }
        let report = if self.kind == Kind::Warm {
            alg.full_table();
            let (path, products) = cache::save(cache_dir.expect("checked when parsing"), &alg)?;
            Report::Cache(CacheReport {
                version: REPORT_VERSION,
                config: self.echo(),
                file: path.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default(),
                products,
                elapsed_ms: None,
            })
        } else {
            let report = Report::Check(self.check_report(&alg)?);
            if let Some(dir) = cache_dir {
                cache::save(dir, &alg)?;
            }
            report
        };
        Ok(Outcome { report })
    }

    fn check_report<R: Ring>(&self, alg: &Arc<SchurAlgebra<R>>) -> Result<CheckReport, CliError> {
        let mut report = CheckReport {
            version: REPORT_VERSION,
            config: self.echo(),
            dims: None,
            euler_characteristic: None,
            d2_zero: None,
            homology: None,
            checks: BTreeMap::new(),
            elapsed_ms: None,
        };
        let t = &self.targets;

        if self.kind == Kind::Build || t.iter().any(|t| t.needs_complex()) {
            let lam = self.require_partition()?;
            let bm = build_bm_complex(alg.clone(), lam, self.pool).map_err(|e| usage(e.to_string()))?;
            report.dims = Some((bm.bottom()..=bm.top()).map(|k| DimEntry { degree: k, dim: bm.dim(k) }).collect());
            report.euler_characteristic = Some(bm.euler_characteristic());
            if t.contains(&Target::Dims) {
                let total: usize = bm.dims().iter().sum();
                report_insert(
                    &mut report.checks,
                    Target::Dims,
                    CheckResult::new(true, format!("{total} basis elements in degrees {}..{}", bm.bottom(), bm.top())),
                );
            }
            if t.contains(&Target::D2) || t.contains(&Target::Exactness) {
                let d2 = validate(bm.ring(), &bm);
                report.d2_zero = Some(d2);
                if t.contains(&Target::D2) {
                    report_insert(&mut report.checks, Target::D2, CheckResult::new(d2, if d2 { "d∘d = 0" } else { "d∘d ≠ 0" }));
                }
                if t.contains(&Target::Exactness) {
                    let h = homology(bm.ring(), &bm);
                    let exact = d2 && h.is_exact();
                    let detail = if !d2 {
                        "not a complex".to_string()
                    } else if exact {
                        "zero homology in every degree".to_string()
                    } else {
                        let torsion: Vec<String> = h
                            .degrees
                            .iter()
                            .filter(|d| !d.torsion.is_empty())
                            .map(|d| format!("degree {}: {:?}", d.degree, d.torsion.iter().map(ToString::to_string).collect::<Vec<_>>()))
                            .collect();
                        format!("betti {:?}; torsion [{}]", h.bettis(), torsion.join(", "))
                    };
                    report.homology = Some(HomologyReport::from(&h));
                    report_insert(&mut report.checks, Target::Exactness, CheckResult::new(exact, detail));
                }
            }
            if t.contains(&Target::ChainIso) {
                let sf = induced_schur_image(alg.clone(), lam, self.pool).map_err(|e| usage(e.to_string()))?;
                let result = match chain_iso_check(&bm, &sf) {
                    Ok(true) => CheckResult::new(true, "φ ⊗ id is an isomorphism of complexes in every degree"),
                    Ok(false) => CheckResult::new(false, "φ ⊗ id is not an invertible chain map"),
                    Err(e) => CheckResult::new(false, e.to_string()),
                };
                report_insert(&mut report.checks, Target::ChainIso, result);
            }
        }
        if t.contains(&Target::Splitting) {
            let lam = self.lambda.as_ref().expect("checked when parsing");
            let bar = bar_complex(alg.clone(), lam, &self.pool.weights(self.n, self.r)).map_err(|e| usage(e.to_string()))?;
            let ok = splitting_check(&bar);
            let detail = format!(
                "contracting homotopy of the bar resolution ({} basis elements) {}",
                bar.dims().iter().sum::<usize>(),
                if ok { "verified" } else { "fails" }
            );
            report_insert(&mut report.checks, Target::Splitting, CheckResult::new(ok, detail));
        }
        if t.contains(&Target::Triangularity) {
            let result = match alg.triangularity_violation() {
                None => CheckResult::new(true, "products of Borel basis elements never lower the level"),
                Some((a, b, c)) => {
                    let key = |l| alg.index.label_key(l);
                    CheckResult::new(false, format!("{} · {} has a term at {}", key(a), key(b), key(c)))
                }
            };
            report_insert(&mut report.checks, Target::Triangularity, result);
        }
        Ok(report)
    }
}

fn report_insert(checks: &mut BTreeMap<String, CheckResult>, target: Target, result: CheckResult) {
    checks.insert(target.name().to_string(), result);
}
