//! Name-keyed registries of interchangeable strategies.
//!
//! Each family of algorithms (hyperplane distance methods, module families,
//! verifiers) lives behind a trait object and is looked up by the name the
//! CLI was given.

use crate::error::{Error, Result};

pub struct Registry<T: ?Sized> {
    kind: &'static str,
    entries: Vec<(&'static str, Box<T>)>,
}

impl<T: ?Sized> Registry<T> {
    pub fn new(kind: &'static str) -> Self {
        Registry {
            kind,
            entries: Vec::new(),
        }
    }

    /// Registers `entry` under `name`. Panics on a duplicate name; registries
    /// are assembled once at startup so a duplicate is a programming error.
    pub fn register(&mut self, name: &'static str, entry: Box<T>) -> &mut Self {
        assert!(
            self.entries.iter().all(|(n, _)| *n != name),
            "duplicate {} '{name}'",
            self.kind
        );
        self.entries.push((name, entry));
        self
    }

    pub fn with(mut self, name: &'static str, entry: Box<T>) -> Self {
        self.register(name, entry);
        self
    }

    pub fn get(&self, name: &str) -> Result<&T> {
        self.entries
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, e)| e.as_ref())
            .ok_or_else(|| Error::Unknown {
                kind: self.kind,
                name: name.to_string(),
            })
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.iter().map(|(n, _)| *n)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, &T)> + '_ {
        self.entries.iter().map(|(n, e)| (*n, e.as_ref()))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    trait Greeter {
        fn greet(&self) -> String;
    }

    struct Hello;
    impl Greeter for Hello {
        fn greet(&self) -> String {
            "hello".into()
        }
    }

    #[test]
    fn lookup_by_name() {
        let reg = Registry::<dyn Greeter>::new("greeter").with("hello", Box::new(Hello));
        assert_eq!(reg.get("hello").unwrap().greet(), "hello");
        assert_eq!(reg.names().collect::<Vec<_>>(), ["hello"]);
        match reg.get("bye") {
            Err(Error::Unknown { kind, name }) => {
                assert_eq!(kind, "greeter");
                assert_eq!(name, "bye");
            }
            _ => panic!("expected unknown-name error"),
        }
    }

    #[test]
    #[should_panic(expected = "duplicate")]
    fn duplicate_names_panic() {
        let _ = Registry::<dyn Greeter>::new("greeter")
            .with("hello", Box::new(Hello))
            .with("hello", Box::new(Hello));
    }
}
