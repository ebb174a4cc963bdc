use setcalc::audit::{run_all, AuditConfig};

#[test]
fn full_suite_passes_at_rank_3() {
    let reports = run_all(&AuditConfig::default());
    let mut bad = Vec::new();
    for (name, r) in &reports {
        match r {
            Ok(rep) => {
                println!("{rep}");
                if !rep.passed() {
                    bad.push(name.clone());
                }
            }
            Err(e) => {
                println!("{name}: {e}");
                bad.push(name.clone());
            }
        }
    }
    assert!(bad.is_empty(), "failing checks: {bad:?}");
}
