//! Wedge products, lines, and convex polygons.

use polycover::geom::{
    affine_apply, line_intersect, triangle_area, wedge, AffineMap, ConvexPolygon, Line2, Vector2,
};

fn main() {
    let u = Vector2::new(1.0, 0.0);
    let v = Vector2::new(0.0, 2.0);
    println!("u ^ v = {}", wedge(&u, &v)); // 1
    println!("v ^ u = {}", wedge(&v, &u)); // -1

    let o = Vector2::new(0.0, 0.0);
    println!("|triangle| = {}", triangle_area(&o, &u, &v));

    let l1 = Line2::through(&Vector2::new(0.0, 0.0), &Vector2::new(1.0, 1.0)).unwrap();
    let l2 = Line2::through(&Vector2::new(0.0, 1.0), &Vector2::new(1.0, 0.0)).unwrap();
    println!("diagonals meet at {:?}", line_intersect(&l1, &l2).unwrap());

    // clockwise input is reoriented
    let square = ConvexPolygon::new(vec![
        Vector2::new(0.0, 0.0),
        Vector2::new(0.0, 1.0),
        Vector2::new(1.0, 1.0),
        Vector2::new(1.0, 0.0),
    ])
    .unwrap();
    println!("square area {} with first ear {}", square.area(), square.ear_area(0));

    let bowtie = ConvexPolygon::new(vec![
        Vector2::new(0.0, 0.0),
        Vector2::new(1.0, 1.0),
        Vector2::new(1.0, 0.0),
        Vector2::new(0.0, 1.0),
    ]);
    println!("bowtie: {}", bowtie.unwrap_err());

    let shear = AffineMap::new([[2.0, 1.0], [0.0, 0.5]], Vector2::new(3.0, -1.0));
    let image = affine_apply(&shear, &square).unwrap();
    println!("sheared area {} (det {})", image.area(), shear.determinant());
    println!("contains its center: {}", image.contains_point(&shear.apply(&Vector2::new(0.5, 0.5)), &1e-12));
}
