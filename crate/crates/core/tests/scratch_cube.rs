// scratch discriminator: polynomial bump => GL-exact quadrature => identity must hold to 1e-13
#[test]
fn cube_simp_polynomial_pseudobump() {
    use fefflab_core::calculus::{graph_mu, GraphJet, Jet2Graph};
    use fefflab_core::quad::{BaseBox, BoxGrid};
    type C = num_complex::Complex64;
    let cube = |t: GraphJet| {
        let one = GraphJet::constant_re(1.0);
        let s = one - t * t;
        s * s * s
    };
    let bump_jet = |z: C, u: f64| -> GraphJet {
        let jx = GraphJet::var_x(z);
        let jy = GraphJet::var_y(z);
        let ju = GraphJet::var_u(u);
        cube(jx) * cube(jy) * cube(ju) * C::new(0.5, 0.0)
    };
    let base = BaseBox::cube(1.0);
    let grid = BoxGrid::new(base, [24, 24, 24]);
    let lhs = grid.integrate(|n| {
        let f = GraphJet::var_z(n.z) * GraphJet::var_zb(n.z) + bump_jet(n.z, n.u);
        graph_mu(&Jet2Graph::from_jet(f).unwrap())
    });
    let rhs = grid.integrate(|n| {
        let j = Jet2Graph::from_jet(bump_jet(n.z, n.u)).unwrap();
        1.0 + (3.0 * j.fzzb - 1.0) * j.fu * j.fu
    });
    eprintln!("lhs = {lhs}, rhs = {rhs}, diff = {}", lhs - rhs);
    assert!((lhs - rhs).abs() < 1e-10, "identity violated: {} vs {}", lhs, rhs);
}
