//! Name-keyed registries of interchangeable strategies, selected at runtime.

pub trait Named {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
}

pub struct Registry<T: ?Sized + Named> {
    entries: Vec<Box<T>>,
}

impl<T: ?Sized + Named> Default for Registry<T> {
    fn default() -> Self {
        Registry { entries: Vec::new() }
    }
}

impl<T: ?Sized + Named> Registry<T> {
    /// Later registrations under an existing name replace the earlier one.
    pub fn register(&mut self, item: Box<T>) {
        self.entries.retain(|e| e.name() != item.name());
        self.entries.push(item);
    }

    pub fn get(&self, name: &str) -> Option<&T> {
        self.entries.iter().find(|e| e.name() == name).map(|b| b.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.entries.iter().map(|b| b.as_ref())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
