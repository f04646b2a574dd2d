// Persisting computed KL polynomials to a cache file and reloading them.

use oinf::hecke::{read_cache_file, KlEngine, Perm};

pub fn run_example() -> oinf::Result<()> {
    let dir = std::env::temp_dir().join(format!("oinf-kl-cache-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("kl.bin");
    let _ = std::fs::remove_file(&path);

    let engine = KlEngine::new();
    engine.attach_cache_file(&path)?;
    let w0 = Perm::longest(5);
    let e = Perm::identity(5);
    engine.kl_poly(&e, &w0)?;
    engine.kl_poly(&"[3,4,1,2]".parse()?, &"[4,3,2,1]".parse()?)?;
    let written = engine.flush()?;
    println!("wrote {written} records to {}", path.display());

    let fresh = KlEngine::new();
    let loaded = fresh.attach_cache_file(&path)?;
    assert_eq!(loaded, read_cache_file(&path)?.len());
    assert_eq!(fresh.kl_poly(&e, &w0)?, engine.kl_poly(&e, &w0)?);
    println!("reloaded {loaded} records");
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("kl_cache");
}
