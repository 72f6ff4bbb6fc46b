/// Declares named check functions, a `CHECKS` table listing them, and one
/// `#[test]` per check.
macro_rules! checks {
    ($( fn $name:ident() $body:block )*) => {
        $( pub fn $name() $body )*

        #[allow(dead_code)]
        pub const CHECKS: &[(&str, fn())] = &[$((stringify!($name), $name)),*];

        #[cfg(test)]
        mod generated {
            $( #[test] fn $name() { super::$name() } )*
        }
    };
}
