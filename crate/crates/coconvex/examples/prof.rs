use std::time::Instant;
fn main() {
    let mut rng = coconvex::samples::rng_from_seed(7 ^ (3u64) << 8);
    // skip to an n=4 family like the suite generates
    let mut fam = None;
    for i in 0..20 {
        let n = i % 4 + 1;
        let f = coconvex::samples::sample_coconvex_family(3, n, &mut rng).unwrap();
        if n == 4 && fam.is_none() { fam = Some(f); }
    }
    let fam = fam.unwrap();
    let t = Instant::now();
    let body = fam.member(&[coconvex::scalar::int(2), coconvex::scalar::int(1), coconvex::scalar::int(2), coconvex::scalar::int(2)]).unwrap();
    println!("combine: {:.3?}", t.elapsed());
    let t = Instant::now();
    let (dt, ct) = body.truncate(body.tstar()).unwrap();
    println!("truncate: {:.3?}  dt verts {} ct verts {}", t.elapsed(), dt.vertices().len(), ct.vertices().len());
    let t = Instant::now();
    let v = coconvex::geom::volume(&dt);
    println!("volume dt: {:.3?} = {}", t.elapsed(), v);
    let t = Instant::now();
    let c = body.covolume().unwrap();
    println!("covolume(double): {:.3?} = {}", t.elapsed(), c);
    let t = Instant::now();
    let lam = [coconvex::scalar::int(2), coconvex::scalar::int(1), coconvex::scalar::int(2), coconvex::scalar::int(2)];
    let mut acc = coconvex::body::scale(&fam.bodies[0], &lam[0]).unwrap();
    for (b, l) in fam.bodies.iter().zip(&lam).skip(1) {
        acc = coconvex::body::oplus(&acc, &coconvex::body::scale(b, l).unwrap()).unwrap();
    }
    println!("oplus-chain combine: {:.3?}", t.elapsed());
    assert_eq!(acc, body);
    let t = Instant::now();
    let _af = coconvex::mixed::coconvex_af_check(&fam, 1, 10).unwrap();
    println!("full af check: {:.3?}", t.elapsed());
}
// appended: compare fold strategies
#[allow(dead_code)]
fn alt() {}
