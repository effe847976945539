use prclab::random::RandomModel;
use prclab::solver::Determinism;
use prclab::sweep::{run_sweep, run_sweep_partial, SweepJob, SweepSource};

fn catalogue(min_order: usize, max_order: usize) -> SweepSource {
    SweepSource::Catalogue {
        min_order,
        max_order,
    }
}

#[test]
fn worker_count_does_not_change_the_outcome() {
    let dir = tempfile::tempdir().unwrap();
    let mut seq = SweepJob::new(catalogue(2, 5), dir.path().join("seq"));
    seq.search.determinism = Determinism::SequentialCanonical;
    let mut par = SweepJob::new(catalogue(2, 5), dir.path().join("par"));
    par.jobs = 4;
    let (a, b) = (run_sweep(&seq).unwrap(), run_sweep(&par).unwrap());
    assert!(a.same_outcome(&b), "{a:?}\n{b:?}");
}

#[test]
fn random_source_is_reproducible_from_its_seed() {
    let dir = tempfile::tempdir().unwrap();
    let source = SweepSource::Random {
        model: RandomModel::Connected { p: 0.4 },
        count: 20,
        min_order: 4,
        max_order: 7,
    };
    let mut a = SweepJob::new(source.clone(), dir.path().join("a"));
    let mut b = SweepJob::new(source, dir.path().join("b"));
    a.seed = 11;
    b.seed = 11;
    let (sa, sb) = (run_sweep(&a).unwrap(), run_sweep(&b).unwrap());
    assert_eq!(sa.processed, 20);
    assert!(sa.same_outcome(&sb));
    let ja = std::fs::read_to_string(dir.path().join("a/summary.csv")).unwrap();
    let jb = std::fs::read_to_string(dir.path().join("b/summary.csv")).unwrap();
    assert_eq!(ja, jb);
}

#[test]
fn interrupted_sweep_resumes_to_the_same_outcome() {
    let dir = tempfile::tempdir().unwrap();
    let full = run_sweep(&SweepJob::new(catalogue(2, 5), dir.path().join("full"))).unwrap();
    let mut job = SweepJob::new(catalogue(2, 5), dir.path().join("resumed"));
    assert!(run_sweep_partial(&job, 12).unwrap().is_none());
    job.resume = true;
    let resumed = run_sweep(&job).unwrap();
    assert!(full.same_outcome(&resumed), "{full:?}\n{resumed:?}");
}
